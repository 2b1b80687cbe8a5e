"""Command-line interface.

JSON goes to stdout with a top-level ``"schema": "p1stab/1"``; floats are
printed with 17 significant digits so output is byte-stable. SVG goes to
``--out`` (stdout when omitted and no JSON is due). Validation errors print
to stderr and exit with status 2.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys

from .cells import cell_of, common_chart, four_cell_transitions, path_is_consistent, scan_path
from .derived_hom import hom_dim
from .errors import P1StabError
from .group_actions import GroupElement, act
from .moduli import reduce_to_K
from .objects import parse_object
from .stability import CohShift, Exotic, Pair, StabilityCondition, admits_slope_function, heart_at, hn, mass
from . import svg

SCHEMA = "p1stab/1"


def dumps(obj) -> str:
    """JSON with floats at 17 significant digits."""
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError(f"non-finite float {obj!r} in output")
        return format(obj, ".17g")
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _load_json_arg(value, what):
    text = value
    if not value.lstrip().startswith(("{", "[")):
        if not os.path.exists(value):
            raise P1StabError(f"{what}: neither JSON nor an existing file: {value!r}")
        with open(value) as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise P1StabError(f"{what}: invalid JSON ({exc})") from None


def _condition(value):
    return StabilityCondition.from_json(_load_json_arg(value, "--sc"))


def _complex_pair(text):
    try:
        re_, im_ = (float(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 're,im', got {text!r}") from None
    return complex(re_, im_)


def _heart_json(h):
    if isinstance(h, CohShift):
        return {"kind": "CohShift", "j": h.j}
    if isinstance(h, Pair):
        return {"kind": "Pair", "p": h.p, "i": h.i, "j": h.j}
    return {"kind": "Exotic", "points": sorted(h.points)}


def _emit(payload):
    sys.stdout.write(dumps({"schema": SCHEMA, **payload}) + "\n")


def _write_svg(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_hom(args):
    x = parse_object(args.X)
    y = parse_object(args.Y)
    print(hom_dim(x, y, args.t))


def cmd_hn(args):
    sc = _condition(args.sc)
    obj = parse_object(args.object)
    filt = hn(sc, obj)
    _emit(
        {
            "condition": sc.to_json(),
            "regime": sc.regime.value,
            "object": str(obj),
            "filtration": filt.to_json(),
            "mass": mass(sc, obj),
        }
    )
    if args.svg:
        _write_svg(svg.rays_svg(sc, filt), args.out or "hn.svg")


def cmd_classify(args):
    sc = _condition(args.sc)
    _emit({"regime": sc.regime.value, **cell_of(sc).to_json()})


def cmd_reduce(args):
    sc = _condition(args.sc)
    _emit(reduce_to_K(sc).to_json())


def cmd_act(args):
    sc = _condition(args.sc)
    if args.g is not None:
        g = GroupElement.from_json(_load_json_arg(args.g, "--g"))
    else:
        g = GroupElement(args.z, args.tensor)
    out = act(g, sc)
    _emit({**out.to_json(), "regime": out.regime.value})


def cmd_heart(args):
    sc = _condition(args.sc)
    h = heart_at(sc, args.r)
    _emit({"r": args.r, "heart": _heart_json(h), "admits_slope_function": admits_slope_function(h)})


def cmd_scan(args):
    a = _condition(args.sc_from)
    b = _condition(args.sc_to)
    path = scan_path(a, b, args.steps)
    _emit(
        {
            "path": [{"t": t, "cell": str(label)} for t, label in path],
            "transitions": [
                {"from": str(x), "to": str(y), "separated": sep} for x, y, sep in four_cell_transitions(path)
            ],
            "consistent": path_is_consistent(path),
        }
    )
    if args.svg:
        ca, cb = common_chart(a, b)
        params = svg.interpolated_params(ca, cb, [t for t, _ in path])
        _write_svg(svg.scan_svg(path, params), args.out or "scan.svg")


def random_condition(rng, regime=None):
    """Random condition: base in [-3, 3], alpha - beta in (-0.99, 2), log-masses in [-2, 2]."""
    regime = regime or rng.choice(("geometric", "wall", "quiver"))
    if regime == "geometric":
        gap = rng.uniform(-0.99, -0.01)
    elif regime == "wall":
        gap = 0.0
    else:
        gap = rng.uniform(0.01, 2.0)
    beta = rng.uniform(-2.0, 2.0)
    return StabilityCondition(
        rng.randint(-3, 3), beta + gap, beta, rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)
    )


def cmd_render_k(args):
    rng = random.Random(args.seed)
    points = []
    for _ in range(args.samples):
        res = reduce_to_K(random_condition(rng))
        points.append((res.point, res.region))
    _write_svg(svg.k_domain_svg(points), args.out)


def build_parser():
    p = argparse.ArgumentParser(prog="p1stab", description="Stability conditions on D(P^1).")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("hom", help="dim Hom(X, Y[t])")
    s.add_argument("X")
    s.add_argument("Y")
    s.add_argument("--t", type=int, default=0)
    s.set_defaults(func=cmd_hom)

    sc_help = "stability condition as JSON or a path to a JSON file"

    s = sub.add_parser("hn", help="Harder-Narasimhan filtration")
    s.add_argument("--sc", required=True, help=sc_help)
    s.add_argument("object")
    s.add_argument("--svg", action="store_true", help="also write a ray diagram")
    s.add_argument("--out", help="SVG path (default hn.svg, '-' for stdout)")
    s.set_defaults(func=cmd_hn)

    s = sub.add_parser("classify", help="cell containing a condition")
    s.add_argument("--sc", required=True, help=sc_help)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("reduce", help="reduce into the fundamental domain K")
    s.add_argument("--sc", required=True, help=sc_help)
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("act", help="apply the C-action and/or a twist")
    s.add_argument("--sc", required=True, help=sc_help)
    s.add_argument("--z", type=_complex_pair, default=0j, help="'re,im' (use --z=-1,2 for negatives)")
    s.add_argument("--tensor", type=int, default=0)
    s.add_argument("--g", help='group element JSON {"z": [re, im], "tensor": m}')
    s.set_defaults(func=cmd_act)

    s = sub.add_parser("heart", help="the heart P((r-1, r])")
    s.add_argument("--sc", required=True, help=sc_help)
    s.add_argument("--r", type=float, default=1.0)
    s.set_defaults(func=cmd_heart)

    s = sub.add_parser("scan", help="classify samples along a straight path")
    s.add_argument("--from", dest="sc_from", required=True, help=sc_help)
    s.add_argument("--to", dest="sc_to", required=True, help=sc_help)
    s.add_argument("--steps", type=int, default=100)
    s.add_argument("--svg", action="store_true")
    s.add_argument("--out", help="SVG path (default scan.svg, '-' for stdout)")
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("render-K", help="SVG of K with reduced random conditions")
    s.add_argument("--samples", type=int, default=500)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", help="SVG path (stdout when omitted)")
    s.set_defaults(func=cmd_render_k)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (P1StabError, ValueError, KeyError, TypeError) as exc:
        print(f"p1stab {args.command}: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
