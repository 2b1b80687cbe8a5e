"""The C-action, the twist action of Pic(P^1), rebasing and orbit equality.

``z = x + iy`` rescales every mass by ``e^x`` and raises every phase by
``y / pi``; ``z = i pi`` is the shift functor. Tensoring by ``O(m)`` only
relabels the base of the chart. The two actions commute, so a group element
is a pair ``(z, m)`` composed componentwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._config import EPS_PHASE
from .errors import InvalidConditionError, RegimeError
from .objects import LineBundle
from .stability import Regime, StabilityCondition, phase_of


@dataclass(frozen=True)
class GroupElement:
    z: complex = 0j
    tensor: int = 0

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.z + other.z, self.tensor + other.tensor)

    def inverse(self) -> "GroupElement":
        return GroupElement(-self.z, -self.tensor)

    def to_json(self):
        return {"z": [self.z.real, self.z.imag], "tensor": self.tensor}

    @classmethod
    def from_json(cls, data):
        re_, im_ = data["z"]
        tensor = data.get("tensor", 0)
        if isinstance(tensor, bool) or not isinstance(tensor, int):
            raise InvalidConditionError(f"tensor must be an integer, got {tensor!r}")
        return cls(complex(float(re_), float(im_)), tensor)


SHIFT = GroupElement(1j * math.pi, 0)


def compose(g1: GroupElement, g2: GroupElement) -> GroupElement:
    """``g1`` after ``g2``."""
    return g1 @ g2


def act(g: GroupElement, sc: StabilityCondition) -> StabilityCondition:
    dphi = g.z.imag / math.pi
    dlog = g.z.real
    return StabilityCondition(
        sc.i + g.tensor,
        sc.alpha + dphi,
        sc.beta + dphi,
        sc.log_m_alpha + dlog,
        sc.log_m_beta + dlog,
    )


def rebase(sc: StabilityCondition, i_new: int) -> StabilityCondition:
    """Express the same condition in the chart based at ``i_new``.

    Only geometric conditions have more than one chart: in the quiver regime
    ``O(i)`` and ``O(i-1)`` are the only semistable bundles, and on the wall
    every other base lands exactly on the excluded boundary ``alpha = beta - 1``.
    """
    if i_new == sc.i:
        return sc
    if sc.regime is Regime.QUIVER:
        raise RegimeError(f"quiver regime: only O({sc.i - 1}), O({sc.i}) semistable; cannot rebase to {i_new}")
    if sc.regime is Regime.WALL:
        raise RegimeError(f"wall W_{sc.i} has no chart based at {i_new}")
    a = LineBundle(i_new)
    b = LineBundle(i_new - 1, 1)
    return StabilityCondition(
        i_new,
        phase_of(sc, a),
        phase_of(sc, b),
        math.log(abs(sc.z_alpha + (i_new - sc.i) * sc.z_point)),
        math.log(abs(sc.z_beta - (i_new - sc.i) * sc.z_point)),
    )


def equivalent(sc1: StabilityCondition, sc2: StabilityCondition, eps: float = EPS_PHASE) -> bool:
    """Whether two parameter tuples describe the same point of Stab(D(P^1))."""
    if sc1.regime is not sc2.regime:
        return False
    if sc1.i != sc2.i:
        if sc1.regime is not Regime.GEOMETRIC:
            return False
        sc2 = rebase(sc2, sc1.i)
    return (
        abs(sc1.alpha - sc2.alpha) <= eps
        and abs(sc1.beta - sc2.beta) <= eps
        and abs(sc1.log_m_alpha - sc2.log_m_alpha) <= eps
        and abs(sc1.log_m_beta - sc2.log_m_beta) <= eps
    )
