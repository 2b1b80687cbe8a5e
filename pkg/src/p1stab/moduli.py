"""Fundamental domain of Stab(D(P^1)) modulo twists and the C-action.

Every orbit meets the normalized locus X (base 0, ``O(-1)[1]`` at phase 1
with mass 1), which the chart ``w = log m(O) + i pi phi(O)`` identifies with
the upper half-plane. Quiver points (``Im w > pi``) are alone in their orbit.
A geometric orbit meets X once per twist; the representative is the one
whose ``Z(O)`` lies in the strip cut out by the two lines perpendicular to
``Z(O_x)`` through its endpoints. In the chart this is

    K = {x + iy : y > 0, cos y <= exp(-|x|)}    (for y < pi/2; all y >= pi/2),

and the two boundary curves ``cos y = exp(-+x)`` are glued by ``x -> -x``.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Tuple

from . import _kernels as K
from ._config import EPS_PHASE
from .errors import NotNormalizedError, PoleError
from .group_actions import GroupElement, act, rebase
from .objects import LineBundle
from .stability import Regime, StabilityCondition, phase_of


class Region(enum.Enum):
    OUTSIDE = "outside"
    INTERIOR = "interior"
    BOUNDARY = "boundary"


_REGION = {K.OUTSIDE: Region.OUTSIDE, K.INTERIOR: Region.INTERIOR, K.BOUNDARY: Region.BOUNDARY}


def normalize_to_X(sc: StabilityCondition) -> Tuple[StabilityCondition, GroupElement]:
    """Move ``sc`` into X; returns the normalized condition and the element applied."""
    y = math.pi * (1.0 - sc.beta)
    g = GroupElement(complex(-sc.log_m_beta, y), -sc.i)
    return _normalized(act(g, sc)), g


def _normalized(sc):
    # Pin the normalization exactly; act() only gets within rounding.
    return StabilityCondition(0, sc.alpha, 1.0, sc.log_m_alpha, 0.0)


def _check_normalized(sc):
    if sc.i != 0 or abs(sc.beta - 1.0) > EPS_PHASE or abs(sc.log_m_beta) > EPS_PHASE:
        raise NotNormalizedError(
            f"condition not in X (need i=0, beta=1, log_m_beta=0): {sc.params()}"
        )


def chart_X(sc_X: StabilityCondition) -> complex:
    _check_normalized(sc_X)
    return complex(sc_X.log_m_alpha, math.pi * sc_X.alpha)


def in_strip(sc_X: StabilityCondition) -> bool:
    _check_normalized(sc_X)
    zo = sc_X.z_alpha
    return bool(K.strip_contains(zo.real, zo.imag))


def in_K(w: complex) -> Region:
    return _REGION[K.k_region(w.real, w.imag, EPS_PHASE)]


def identify_boundary(w: complex) -> complex:
    """The glued partner ``(x, y) -> (-x, y)`` of a boundary point of K."""
    if in_K(w) is not Region.BOUNDARY:
        raise ValueError(f"{w!r} is not on the boundary of K")
    return complex(-w.real, w.imag)


def canonical_point(w: complex) -> complex:
    """Representative of ``w`` in K-bar modulo the boundary gluing (``x >= 0`` side)."""
    if in_K(w) is Region.BOUNDARY:
        return complex(abs(w.real), w.imag)
    return w


@dataclass(frozen=True)
class ReductionResult:
    """``act(used, condition)`` recovers the input up to :func:`equivalent`."""

    point: complex
    region: Region
    used: GroupElement
    condition: StabilityCondition

    def to_json(self):
        return {
            "point": [self.point.real, self.point.imag],
            "region": self.region.value,
            "used": self.used.to_json(),
            "condition": self.condition.to_json(),
        }


def _twist_representative(sc, n):
    """Chart point and group element after rebasing to ``n`` and normalizing."""
    a = phase_of(sc, LineBundle(n))
    b = phase_of(sc, LineBundle(n - 1, 1))
    za = sc.z_alpha + (n - sc.i) * sc.z_point
    zb = sc.z_beta - (n - sc.i) * sc.z_point
    log_a = math.log(abs(za))
    log_b = math.log(abs(zb))
    g = GroupElement(complex(-log_b, math.pi * (1.0 - b)), -n)
    w = complex(log_a - log_b, math.pi * (a - b + 1.0))
    return w, g


def reduce_to_K(sc: StabilityCondition) -> ReductionResult:
    """Canonical representative of the (twist x C)-orbit of ``sc`` in K-bar."""
    if sc.regime is not Regime.GEOMETRIC:
        sc_X, g = normalize_to_X(sc)
        w = chart_X(sc_X)
        region = in_K(w)
        return ReductionResult(w, region, g.inverse(), sc_X)

    zo = sc.z_structure
    zpt = sc.z_point
    t = K.strip_offset(zo.real, zo.imag, zpt.real, zpt.imag)
    n0 = math.floor(t)
    best = None
    for n in (n0 - 1, n0, n0 + 1, n0 + 2):
        w, g = _twist_representative(sc, n)
        region = in_K(w)
        if region is Region.OUTSIDE:
            continue
        # On the glued boundary both sides qualify; keep the x >= 0 one.
        if best is None or w.real > best[0].real:
            best = (w, g, region)
    if best is None:
        raise ArithmeticError(f"no twist puts {sc.params()} into the strip (t={t!r})")
    w, g, region = best
    # g carries a pure tensor by -n, which relabels the chart based at n.
    reduced = _normalized(act(g, rebase(sc, -g.tensor)))
    if not in_strip(reduced) and region is Region.INTERIOR:
        raise ArithmeticError(f"reduced condition {reduced.params()} fails the strip test")
    if region is Region.BOUNDARY:
        w = canonical_point(w)
    return ReductionResult(w, region, g.inverse(), reduced)


# --- explicit conformal pieces ----------------------------------------------


def _pole(z, at, name):
    if z == at or (isinstance(z, complex) and abs(z - at) == 0.0):
        raise PoleError(f"{name} has a pole at {at!r}")


def map_disk(z: complex) -> complex:
    """``(z - i)/(z + i)``: upper half-plane onto the unit disk."""
    _pole(z, -1j, "map_disk")
    return (z - 1j) / (z + 1j)


def map_a(z: complex) -> complex:
    """``-2i (zi + 1)/(zi - 1)``: unit disk onto the upper half-plane, ``-1 -> 2``, ``1 -> -2``."""
    _pole(z, -1j, "map_a")
    return -2j * (z * 1j + 1) / (z * 1j - 1)


def map_b(z: complex) -> complex:
    """Inverse Joukowski ``(z + sqrt(z^2 - 4))/2`` on the branch with ``|w| >= 1``.

    Sends the closed upper half-plane onto ``{|w| >= 1, Im w >= 0}`` with
    ``+-2 -> +-1``; the root is chosen pointwise, so the cut is the segment
    ``[-2, 2]`` approached from above.
    """
    z = complex(z)
    r = cmath.sqrt(z * z - 4)
    w = (z + r) / 2
    w2 = (z - r) / 2
    if abs(w2) > abs(w) or (abs(w2) == abs(w) and w2.imag > w.imag):
        w = w2
    return w


def map_inv(z: complex) -> complex:
    _pole(z, 0, "map_inv")
    return 1 / z


def map_half(z: complex) -> complex:
    """``-i (z + 1)/(z - 1)``: unit disk onto the upper half-plane."""
    _pole(z, 1, "map_half")
    return -1j * (z + 1) / (z - 1)


def map_square(z: complex) -> complex:
    return z * z


def map_half_disk(z: complex) -> complex:
    """``map_inv . map_b . map_a``: unit disk onto the lower half disk, ``-1 -> 1``, ``1 -> -1``."""
    return map_inv(map_b(map_a(z)))
