"""Stability conditions on D(P^1) in the global chart based at a twist ``i``.

A condition is determined by the lifted phases ``alpha`` of ``O(i)`` and
``beta`` of ``O(i-1)[1]`` together with their log-masses, subject to
``alpha > beta - 1``. Three regimes:

* geometric (``alpha < beta``): every line bundle and torsion sheaf is
  semistable, torsion sits at the phase ``psi`` strictly between;
* wall (``alpha == beta``): the Kronecker heart ``<O(i-1)[1], O(i)>`` is a
  single slice;
* quiver (``alpha > beta``): only shifts of ``O(i)`` and ``O(i-1)`` are
  semistable and everything else splits along the exact triangles
  ``O(i)^a -> O(n) -> O(i-1)^b[1]`` and their relatives.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Tuple, Union

from . import _kernels as K
from ._config import EPS_PHASE, MAX_TWIST_SCAN
from .errors import InvalidConditionError, NotSemistableError, RegimeError
from .kclass import KClass, class_of
from .objects import DecomposedObject, LineBundle, Torsion


class Regime(enum.Enum):
    GEOMETRIC = "geometric"
    WALL = "wall"
    QUIVER = "quiver"


_JSON_KEYS = ("i", "alpha", "beta", "log_m_alpha", "log_m_beta")


@dataclass(frozen=True)
class StabilityCondition:
    i: int
    alpha: float
    beta: float
    log_m_alpha: float = 0.0
    log_m_beta: float = 0.0

    regime: Regime = field(init=False, compare=False)
    z_alpha: complex = field(init=False, repr=False, compare=False)
    z_beta: complex = field(init=False, repr=False, compare=False)
    _psi: Optional[float] = field(init=False, repr=False, compare=False)
    _zpt: complex = field(init=False, repr=False, compare=False)
    _zo: complex = field(init=False, repr=False, compare=False)
    _lb_cache: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if isinstance(self.i, bool) or int(self.i) != self.i:
            raise InvalidConditionError(f"base twist must be an integer, got {self.i!r}")
        values = (self.alpha, self.beta, self.log_m_alpha, self.log_m_beta)
        if not all(isinstance(v, (int, float)) and math.isfinite(v) for v in values):
            raise InvalidConditionError(f"non-finite or non-numeric parameter in {values!r}")
        setattr_ = object.__setattr__
        setattr_(self, "i", int(self.i))
        for name in ("alpha", "beta", "log_m_alpha", "log_m_beta"):
            setattr_(self, name, float(getattr(self, name)))
        if self.alpha - self.beta + 1.0 <= EPS_PHASE:
            raise InvalidConditionError(
                f"alpha={self.alpha!r} <= beta - 1 = {self.beta - 1.0!r}: "
                "no stability condition has phi(O(i)) = phi(O(i-1)[1]) - 1"
            )
        try:
            ma = math.exp(self.log_m_alpha)
            mb = math.exp(self.log_m_beta)
        except OverflowError:
            raise InvalidConditionError("log-mass overflows a double") from None
        if not (math.isfinite(ma) and math.isfinite(mb) and ma > 0.0 and mb > 0.0):
            raise InvalidConditionError("masses must be finite and positive")
        za = ma * cmath.exp(1j * math.pi * self.alpha)
        zb = mb * cmath.exp(1j * math.pi * self.beta)
        gap = self.alpha - self.beta
        if abs(gap) <= EPS_PHASE:
            regime = Regime.WALL
        elif gap < 0:
            regime = Regime.GEOMETRIC
        else:
            regime = Regime.QUIVER
        setattr_(self, "regime", regime)
        setattr_(self, "z_alpha", za)
        setattr_(self, "z_beta", zb)
        setattr_(self, "_lb_cache", {})
        setattr_(self, "_zpt", za + zb)
        setattr_(self, "_zo", za - self.i * (za + zb))
        psi = None
        if regime is Regime.WALL:
            psi = self.alpha
        elif regime is Regime.GEOMETRIC:
            zpt = za + zb
            psi = K.lift_phase(zpt.real, zpt.imag, self.alpha)
            if not (self.alpha - EPS_PHASE <= psi <= self.beta + EPS_PHASE):
                raise ArithmeticError(f"torsion phase {psi!r} outside [{self.alpha!r}, {self.beta!r}]")
        setattr_(self, "_psi", psi)

    @property
    def z_point(self) -> complex:
        """Central charge of a skyscraper ``O_x``."""
        return self._zpt

    @property
    def z_structure(self) -> complex:
        """Central charge of ``O = O(0)``."""
        return self._zo

    def params(self) -> Tuple[int, float, float, float, float]:
        return (self.i, self.alpha, self.beta, self.log_m_alpha, self.log_m_beta)

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "alpha": self.alpha,
            "beta": self.beta,
            "log_m_alpha": self.log_m_alpha,
            "log_m_beta": self.log_m_beta,
        }

    @classmethod
    def from_json(cls, data: dict) -> "StabilityCondition":
        if not isinstance(data, dict):
            raise InvalidConditionError("stability condition JSON must be an object")
        extra = set(data) - set(_JSON_KEYS) - {"schema", "regime"}
        if extra:
            raise InvalidConditionError(f"unknown keys {sorted(extra)}")
        missing = [k for k in ("i", "alpha", "beta") if k not in data]
        if missing:
            raise InvalidConditionError(f"missing keys {missing}")
        i = data["i"]
        if isinstance(i, bool) or not isinstance(i, int):
            raise InvalidConditionError(f"'i' must be an integer, got {i!r}")
        return cls(
            i,
            data["alpha"],
            data["beta"],
            data.get("log_m_alpha", 0.0),
            data.get("log_m_beta", 0.0),
        )


def make_condition(i, alpha, beta, log_m_alpha=0.0, log_m_beta=0.0) -> StabilityCondition:
    """Validated condition with ``Z(O(i)) = m_a e^{i pi alpha}``, ``Z(O(i-1)[1]) = m_b e^{i pi beta}``."""
    return StabilityCondition(i, alpha, beta, log_m_alpha, log_m_beta)


def central_charge(sc: StabilityCondition, c) -> complex:
    """Z(c) = rank * Z(O) + degree * Z(O_x); accepts a class or an object."""
    if not isinstance(c, KClass):
        c = class_of(c)
    return c.rank * sc.z_structure + c.degree * sc.z_point


def torsion_phase(sc: StabilityCondition) -> float:
    if sc._psi is None:
        raise NotSemistableError("torsion not semistable in the quiver regime")
    return sc._psi


def _line_phase(sc, n):
    """Phase of the unshifted ``O(n)`` for geometric conditions (memoized)."""
    cache = sc._lb_cache
    ph = cache.get(n)
    if ph is None:
        za, zb = sc.z_alpha, sc.z_beta
        ph = K.line_bundle_phase(
            n - sc.i, za.real, za.imag, zb.real, zb.imag, sc.alpha, sc.beta, sc._psi, EPS_PHASE
        )
        cache[n] = ph
    return ph


def _phase_or_none(sc, ind):
    regime = sc.regime
    if isinstance(ind, LineBundle):
        n = ind.twist
        if regime is Regime.GEOMETRIC:
            return _line_phase(sc, n) + ind.shift
        if regime is Regime.WALL:
            return sc.alpha + ind.shift - (1 if n < sc.i else 0)
        if n == sc.i:
            return sc.alpha + ind.shift
        if n == sc.i - 1:
            return sc.beta + ind.shift - 1
        return None
    if regime is Regime.QUIVER:
        return None
    return sc._psi + ind.shift


def phase_of(sc: StabilityCondition, ind) -> float:
    """Lifted phase of a semistable indecomposable."""
    ph = _phase_or_none(sc, ind)
    if ph is None:
        raise NotSemistableError(f"{ind} is not semistable in the {sc.regime.value} regime")
    return ph


def is_semistable(sc: StabilityCondition, obj: DecomposedObject) -> bool:
    if obj.is_zero:
        raise NotSemistableError("the zero object has no phase")
    lo = hi = None
    for ind, _ in obj.summands:
        ph = _phase_or_none(sc, ind)
        if ph is None:
            return False
        if lo is None:
            lo = hi = ph
        else:
            lo = min(lo, ph)
            hi = max(hi, ph)
    return hi - lo <= EPS_PHASE


@dataclass(frozen=True)
class HNPiece:
    phase: float
    piece: DecomposedObject
    charge: complex

    @property
    def mass(self):
        return abs(self.charge)


@dataclass(frozen=True)
class HNFiltration:
    """Semistable factors in strictly decreasing phase order."""

    pieces: Tuple[HNPiece, ...]

    def __iter__(self):
        return iter(self.pieces)

    def __len__(self):
        return len(self.pieces)

    def __getitem__(self, k):
        return self.pieces[k]

    @property
    def phases(self) -> List[float]:
        return [p.phase for p in self.pieces]

    def to_json(self) -> list:
        return [
            {
                "phase": p.phase,
                "piece": str(p.piece),
                "charge": [p.charge.real, p.charge.imag],
                "mass": abs(p.charge),
            }
            for p in self.pieces
        ]


def _quiver_factors(sc, ind, mult):
    i = sc.i
    a, b = sc.alpha, sc.beta
    if isinstance(ind, Torsion):
        k = ind.shift
        l = ind.length * mult
        return [
            (a + k, LineBundle(i, k), l),
            (b + k, LineBundle(i - 1, k + 1), l),
        ]
    n, k = ind.twist, ind.shift
    if n == i:
        return [(a + k, ind, mult)]
    if n == i - 1:
        return [(b + k - 1, ind, mult)]
    if n > i:
        return [
            (a + k, LineBundle(i, k), (n - i + 1) * mult),
            (b + k, LineBundle(i - 1, k + 1), (n - i) * mult),
        ]
    return [
        (a + k - 1, LineBundle(i, k - 1), (i - 1 - n) * mult),
        (b + k - 1, LineBundle(i - 1, k), (i - n) * mult),
    ]


def hn(sc: StabilityCondition, obj: DecomposedObject) -> HNFiltration:
    """Harder-Narasimhan filtration of a nonzero object."""
    if obj.is_zero:
        raise NotSemistableError("the zero object has no HN filtration")
    factors = []
    if sc.regime is Regime.QUIVER:
        for ind, mult in obj.summands:
            factors.extend(_quiver_factors(sc, ind, mult))
    else:
        for ind, mult in obj.summands:
            factors.append((_phase_or_none(sc, ind), ind, mult))
    factors.sort(key=_phase_key, reverse=True)

    zo, zpt = sc._zo, sc._zpt
    pieces = []
    group = []
    group_phase = None
    charge = 0j
    for ph, ind, mult in factors:
        if group_phase is not None and ph < group_phase - EPS_PHASE:
            pieces.append(_make_piece(group_phase, group, charge))
            group = []
            group_phase = None
            charge = 0j
        if group_phase is None:
            group_phase = ph
        group.append((ind, mult))
        m = -mult if ind.shift % 2 else mult
        if type(ind) is LineBundle:
            charge += m * (zo + ind.twist * zpt)
        else:
            charge += (m * ind.length) * zpt
    pieces.append(_make_piece(group_phase, group, charge))
    return HNFiltration(tuple(pieces))


def _phase_key(factor):
    return factor[0]


def _make_piece(phase, terms, charge):
    if len(terms) == 1:
        piece = DecomposedObject((terms[0],))
    else:
        piece = DecomposedObject.of(terms)
    return HNPiece(phase, piece, charge)


def mass(sc: StabilityCondition, obj: DecomposedObject) -> float:
    return sum(abs(p.charge) for p in hn(sc, obj))


# --- hearts ----------------------------------------------------------------


@dataclass(frozen=True)
class CohShift:
    """The heart ``Coh P^1 [j]``."""

    j: int


@dataclass(frozen=True)
class Pair:
    """The heart ``<O(i-1)[p+j], O(i)[j]>`` with ``p >= 1``."""

    p: int
    i: int
    j: int

    def __post_init__(self):
        if self.p < 1:
            raise ValueError(f"Pair heart needs p >= 1, got {self.p}")


@dataclass(frozen=True)
class Exotic:
    """``A(P) = <O_x, x in P; O_y[1], y not in P; O(n)[1]>``; admits no stability condition."""

    points: FrozenSet[str] = frozenset()


HeartDescriptor = Union[CohShift, Pair, Exotic]


def admits_slope_function(h: HeartDescriptor) -> bool:
    return not isinstance(h, Exotic)


def _window_shift(phase, r):
    """The integer ``k`` with ``phase + k`` in ``(r - 1, r]``, ties snapping to ``r``."""
    return math.floor(r - phase + EPS_PHASE)


def heart_at(sc: StabilityCondition, r: float) -> HeartDescriptor:
    """The heart ``P((r-1, r])``."""
    if sc.regime is Regime.QUIVER:
        q = _window_shift(sc.alpha, r)
        s = _window_shift(sc.beta - 1.0, r)
        return Pair(s - q, sc.i, q)
    if sc.regime is Regime.WALL:
        return Pair(1, sc.i, _window_shift(sc.alpha, r))
    psi = sc._psi
    j = round(r - psi)
    if abs(r - psi - j) <= EPS_PHASE:
        return CohShift(j)
    j = math.floor(r - psi)
    # Largest n with phi(O(n)[1+j]) <= r; phases of O(n) increase with n.
    target = r - j - 1.0 + EPS_PHASE
    n_lo = _search_twist(sc, target)
    return Pair(1, n_lo + 1, j)


def _search_twist(sc, target):
    """Largest ``n`` with ``phi(O(n)) <= target`` (geometric regime)."""
    i = sc.i

    def ok(n):
        if abs(n - i) > MAX_TWIST_SCAN:
            raise RegimeError(f"twist search exceeded |n - i| <= {MAX_TWIST_SCAN}")
        return _line_phase(sc, n) <= target

    if ok(i):
        lo, step = i, 1
        while ok(i + step):
            lo = i + step
            step *= 2
        hi = i + step
    else:
        hi, step = i, 1
        while not ok(i - step):
            hi = i - step
            step *= 2
        lo = i - step
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ok(mid):
            lo = mid
        else:
            hi = mid
    return lo
