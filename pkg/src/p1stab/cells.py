"""Cell decomposition of Stab(D(P^1)) by the heart P((0, 1]).

Labels::

    S(j)          heart Coh P^1 [j]            (3-dimensional)
    SMinus(p,i,j) heart <O(i-1)[p+j], O(i)[j]>, phi(O(i-1)[p+j]) >= phi(O(i)[j])
    SPlus(p,i,j)  same heart,                  phi(O(i-1)[p+j]) <= phi(O(i)[j])
    Wall(i,j)     SMinus(1,i,j) and SPlus(1,i,j) meet: both phases equal
    Line(i,j)     the part of Wall(i,j) where both phases equal 1

SMinus/SPlus are the 4-cells; the rest are lower-dimensional separators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Tuple

from ._config import EPS_PHASE
from .errors import InvalidConditionError, RegimeError
from .group_actions import rebase
from .stability import CohShift, Regime, StabilityCondition, heart_at


@dataclass(frozen=True, repr=False)
class CellLabel:
    kind: str
    p: int = 0
    i: int = 0
    j: int = 0

    KINDS = ("S", "SMinus", "SPlus", "Wall", "Line")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown cell kind {self.kind!r}")
        if self.kind in ("SMinus", "SPlus") and self.p < 1:
            raise ValueError(f"{self.kind} needs p >= 1, got {self.p}")

    @property
    def is_four_cell(self) -> bool:
        return self.kind in ("SMinus", "SPlus")

    def __str__(self):
        if self.kind == "S":
            return f"S({self.j})"
        if self.kind in ("Wall", "Line"):
            return f"{self.kind}({self.i},{self.j})"
        return f"{self.kind}({self.p},{self.i},{self.j})"

    __repr__ = __str__

    @classmethod
    def parse(cls, text: str) -> "CellLabel":
        kind, _, rest = text.strip().partition("(")
        args = [int(a) for a in rest.rstrip(")").split(",")] if rest else []
        if kind == "S" and len(args) == 1:
            return cls(kind, j=args[0])
        if kind in ("Wall", "Line") and len(args) == 2:
            return cls(kind, i=args[0], j=args[1])
        if kind in ("SMinus", "SPlus") and len(args) == 3:
            return cls(kind, *args)
        raise ValueError(f"bad cell label {text!r}")

    def to_json(self):
        out = {"cell": str(self), "kind": self.kind}
        if self.kind == "S":
            out["params"] = {"j": self.j}
        elif self.kind in ("Wall", "Line"):
            out["params"] = {"i": self.i, "j": self.j}
        else:
            out["params"] = {"p": self.p, "i": self.i, "j": self.j}
        return out


def S(j):
    return CellLabel("S", j=j)


def SMinus(p, i, j):
    return CellLabel("SMinus", p, i, j)


def SPlus(p, i, j):
    return CellLabel("SPlus", p, i, j)


def Wall(i, j):
    return CellLabel("Wall", i=i, j=j)


def Line(i, j):
    return CellLabel("Line", i=i, j=j)


def _unit_shift(phase):
    """``k`` with ``phase + k`` in ``(0, 1]``."""
    return math.floor(1.0 - phase + EPS_PHASE)


def cell_of(sc: StabilityCondition) -> CellLabel:
    if sc.regime is Regime.GEOMETRIC:
        heart = heart_at(sc, 1.0)
        if isinstance(heart, CohShift):
            return S(heart.j)
        return SMinus(1, heart.i, heart.j)
    j = _unit_shift(sc.alpha)
    if sc.regime is Regime.WALL:
        if abs(sc.alpha + j - 1.0) <= EPS_PHASE:
            return Line(sc.i, j)
        return Wall(sc.i, j)
    s = _unit_shift(sc.beta - 1.0)
    p = s - j
    phi_low = sc.beta - 1.0 + s  # phi(O(i-1)[p+j])
    phi_high = sc.alpha + j  # phi(O(i)[j])
    if phi_low >= phi_high - EPS_PHASE:
        return SMinus(p, sc.i, j)
    return SPlus(p, sc.i, j)


def neighbors(label: CellLabel) -> List[CellLabel]:
    """4-cells sharing a codimension-one face with ``label``."""
    p, i, j = label.p, label.i, label.j
    if label.kind == "SMinus":
        if p == 1:
            return [SMinus(1, i + 1, j), SMinus(1, i - 1, j), SPlus(1, i, j)]
        return [SPlus(p, i, j), SPlus(p - 1, i, j + 1), SPlus(p - 1, i, j)]
    if label.kind == "SPlus":
        return [SMinus(p, i, j), SMinus(p + 1, i, j - 1), SMinus(p + 1, i, j)]
    raise ValueError(f"{label} is not a 4-cell")


def representative(label: CellLabel, margin: float = 0.1) -> StabilityCondition:
    """An interior point of a 4-cell, unit masses, phases ``margin`` off every face.

    Uses the chart based at ``label.i``: ``phi(O(i)[j])`` and
    ``phi(O(i-1)[p+j])`` are placed at ``3*margin`` and ``1 - 3*margin``
    (swapped for SPlus).
    """
    if not label.is_four_cell:
        raise ValueError(f"{label} is not a 4-cell")
    lo, hi = 3 * margin, 1.0 - 3 * margin
    p, i, j = label.p, label.i, label.j
    if label.kind == "SMinus":
        phi_i, phi_im1 = lo, hi
    else:
        phi_i, phi_im1 = hi, lo
    alpha = phi_i - j
    beta = phi_im1 - (p + j) + 1.0
    return StabilityCondition(i, alpha, beta, 0.0, 0.0)


def common_chart(sc_from, sc_to):
    if sc_from.i == sc_to.i:
        return sc_from, sc_to
    try:
        return sc_from, rebase(sc_to, sc_from.i)
    except RegimeError:
        pass
    try:
        return rebase(sc_from, sc_to.i), sc_to
    except RegimeError:
        raise RegimeError(
            f"endpoints based at {sc_from.i} and {sc_to.i} share no chart"
        ) from None


def scan_path(sc_from: StabilityCondition, sc_to: StabilityCondition, steps: int) -> List[Tuple[float, CellLabel]]:
    """Classify ``steps`` evenly spaced samples of the straight chart segment.

    Crossings of the separators ``alpha = beta`` (wall) and ``psi + j = 1``
    (the 3-cells S(j)) are located and inserted as extra samples, so a
    change of 4-cell across them is always visible in the output.
    """
    if steps < 2:
        raise ValueError("steps must be >= 2")
    a, b = common_chart(sc_from, sc_to)
    i = a.i
    pa = a.params()[1:]
    pb = b.params()[1:]
    gap0 = pa[0] - pa[1]
    gap1 = pb[0] - pb[1]

    def at(t):
        vals = [x + t * (y - x) for x, y in zip(pa, pb)]
        if _on_wall(gap0, gap1, t):
            vals[1] = vals[0]
        try:
            return StabilityCondition(i, *vals)
        except InvalidConditionError as exc:
            raise InvalidConditionError(f"path leaves the chart at t={t!r}: {exc}") from None

    ts = [k / (steps - 1) for k in range(steps)]
    if gap0 != gap1:
        t_wall = gap0 / (gap0 - gap1)
        if 0.0 < t_wall < 1.0:
            ts.append(t_wall)
    ts.sort()
    samples = [(t, at(t)) for t in ts]
    extra = []
    for (t0, s0), (t1, s1) in zip(samples, samples[1:]):
        extra.extend(_s_crossings(at, t0, s0, t1, s1))
    samples.extend(extra)
    samples.sort(key=lambda ts_: ts_[0])
    return [(t, cell_of(sc)) for t, sc in samples]


def _s_crossings(at, t0, s0, t1, s1):
    """Samples where ``psi`` passes an integer between two geometric samples."""
    if s0.regime is Regime.QUIVER or s1.regime is Regime.QUIVER:
        return []
    p0, p1 = s0._psi, s1._psi
    lo, hi = min(p0, p1), max(p0, p1)
    out = []
    c = math.floor(lo + EPS_PHASE) + 1
    while c < hi - EPS_PHASE:
        a, b = t0, t1
        for _ in range(80):
            mid = 0.5 * (a + b)
            if (at(mid)._psi - c) * (p0 - c) > 0:
                a = mid
            else:
                b = mid
            if b - a < 1e-15:
                break
        t = b if abs(at(b)._psi - c) <= abs(at(a)._psi - c) else a
        sc = at(t)
        if sc.regime is not Regime.QUIVER and abs(sc._psi - c) <= EPS_PHASE:
            out.append((t, sc))
        c += 1
    return out


def _on_wall(gap0, gap1, t):
    return gap0 != gap1 and abs(gap0 + t * (gap1 - gap0)) <= 1e-12


def four_cell_transitions(path) -> List[Tuple[CellLabel, CellLabel, bool]]:
    """Consecutive distinct 4-cells along a path; the flag says a separator sat between them."""
    out = []
    prev = None
    separated = False
    for _, label in path:
        if not label.is_four_cell:
            separated = True
            continue
        if prev is not None and label != prev:
            out.append((prev, label, separated))
        prev = label
        separated = False
    return out


def path_is_consistent(path) -> bool:
    """Every direct 4-cell change along the path is between declared neighbors."""
    for a, b, separated in four_cell_transitions(path):
        if not separated and b not in neighbors(a):
            return False
    return True
