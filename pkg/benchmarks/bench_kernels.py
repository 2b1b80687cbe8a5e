"""Compare the compiled kernels with the pure-Python fallback.

Two levels:

* micro: each kernel called directly from both modules (``timeit``);
* end to end: a fixed workload (phases, HN filtrations, reductions) run in a
  subprocess per backend, selected with ``P1STAB_KERNELS``.

Usage: ``python benchmarks/bench_kernels.py [--repeat N]``
"""

import argparse
import json
import os
import subprocess
import sys
import timeit

from p1stab._kernels import _pykernels as py

try:
    from p1stab._kernels import _ckernels as cy
except ImportError:
    cy = None

MICRO = {
    "lift_phase": ("f(0.3, 0.9, 0.25)", {}),
    "line_bundle_phase": (
        "f(7, 0.7071067811865476, 0.7071067811865475, -0.7071067811865475, 0.7071067811865476, 0.25, 0.75, 0.5, 1e-9)",
        {},
    ),
    "hom_sheaf": ("f(True, -3, True, 5, False, 0)", {}),
    "strip_offset": ("f(0.3, 1.2, -0.4, 1.9)", {}),
    "k_region": ("f(0.4, 0.9, 1e-9)", {}),
}

WORKLOAD = r"""
import json, random, time
from p1stab import _kernels, reduce_to_K, hn, phase_of
from p1stab.objects import DecomposedObject, LineBundle, Torsion
from p1stab.stability import StabilityCondition
rng = random.Random(0)
conds = []
for _ in range(400):
    beta = rng.uniform(-2, 2)
    gap = rng.choice([-rng.uniform(0.01, 0.99), 0.0, rng.uniform(0.01, 2)])
    conds.append((rng.randint(-3, 3), beta + gap, beta, rng.uniform(-2, 2), rng.uniform(-2, 2)))
objs = [DecomposedObject.of([(LineBundle(n, k), 1)]) for n in range(-40, 41) for k in (0, 1)]
objs += [DecomposedObject.of([(Torsion("x", 2), 1)])]
t0 = time.perf_counter()
for p in conds:
    sc = StabilityCondition(*p)
    for o in objs:
        hn(sc, o)
    reduce_to_K(sc)
print(json.dumps({"backend": _kernels.BACKEND, "seconds": time.perf_counter() - t0}))
"""


def micro(repeat):
    rows = []
    for name, (stmt, _) in MICRO.items():
        t_py = min(timeit.repeat(stmt, globals={"f": getattr(py, name)}, number=200000, repeat=repeat)) / 200000
        t_cy = None
        if cy is not None:
            t_cy = min(timeit.repeat(stmt, globals={"f": getattr(cy, name)}, number=200000, repeat=repeat)) / 200000
        rows.append((name, t_py, t_cy))
    return rows


def end_to_end(backend):
    env = dict(os.environ)
    if backend == "python":
        env["P1STAB_KERNELS"] = "python"
    else:
        env.pop("P1STAB_KERNELS", None)
    out = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    print("micro (ns per call)")
    print(f"  {'kernel':<20}{'python':>10}{'cython':>10}{'speedup':>9}")
    for name, t_py, t_cy in micro(args.repeat):
        if t_cy is None:
            print(f"  {name:<20}{t_py * 1e9:>10.0f}{'n/a':>10}")
        else:
            print(f"  {name:<20}{t_py * 1e9:>10.0f}{t_cy * 1e9:>10.0f}{t_py / t_cy:>8.1f}x")

    print("end to end (400 conditions x 163 HN filtrations + reduction)")
    results = {b: end_to_end(b) for b in ("python", "default")}
    for b, r in results.items():
        print(f"  {b:<8} backend={r['backend']:<7} {r['seconds']:.3f}s")
    if results["default"]["backend"] == "cython":
        print(f"  speedup {results['python']['seconds'] / results['default']['seconds']:.2f}x")


if __name__ == "__main__":
    main()
