"""Exact K-theory of D(P^1) in the basis ([O], [O_x]).

A class is the pair (rank, degree): ``[O(n)] = (1, n)``, ``[O_x] = (0, 1)``,
and a shift by ``k`` multiplies by ``(-1)**k``.
"""

from __future__ import annotations

from typing import NamedTuple

from .objects import DecomposedObject, LineBundle


class KClass(NamedTuple):
    rank: int
    degree: int

    def __add__(self, other):
        return KClass(self.rank + other.rank, self.degree + other.degree)

    def __sub__(self, other):
        return KClass(self.rank - other.rank, self.degree - other.degree)

    def __neg__(self):
        return KClass(-self.rank, -self.degree)

    def __mul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return KClass(n * self.rank, n * self.degree)

    __rmul__ = __mul__

    def to_json(self):
        return [self.rank, self.degree]

    @classmethod
    def from_json(cls, data):
        rank, degree = data
        if isinstance(rank, bool) or isinstance(degree, bool):
            raise TypeError("KClass entries must be integers")
        return cls(int(rank), int(degree))


ZERO = KClass(0, 0)


def euler_form(a: KClass, b: KClass) -> int:
    """chi(a, b) = r r' + r d' - d r' (Riemann-Roch on P^1)."""
    return a.rank * b.rank + a.rank * b.degree - a.degree * b.rank


def class_of(obj) -> KClass:
    """Signed class of a :class:`~p1stab.objects.DecomposedObject` or indecomposable."""
    if isinstance(obj, DecomposedObject):
        r = d = 0
        for ind, mult in obj.summands:
            m = -mult if ind.shift % 2 else mult
            if type(ind) is LineBundle:
                r += m
                d += m * ind.twist
            else:
                d += m * ind.length
        return KClass(r, d)
    sign = -1 if obj.shift % 2 else 1
    if isinstance(obj, LineBundle):
        return KClass(sign, sign * obj.twist)
    return KClass(0, sign * obj.length)
