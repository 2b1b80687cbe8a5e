"""Dimensions of graded Hom spaces between decomposed objects."""

from __future__ import annotations

from . import _kernels as K
from ._kernels import _pykernels

# Beyond this the compiled kernel's C longs could overflow; Python ints cannot.
_C_LIMIT = 2**61
from .objects import DecomposedObject, LineBundle


def _hom_ind(a, b, t):
    s = t + b.shift - a.shift
    if s != 0 and s != 1:
        return 0
    a_line = isinstance(a, LineBundle)
    b_line = isinstance(b, LineBundle)
    same = (not a_line) and (not b_line) and a.point == b.point
    a_val = a.twist if a_line else a.length
    b_val = b.twist if b_line else b.length
    kernel = K.hom_sheaf if max(abs(a_val), abs(b_val)) < _C_LIMIT else _pykernels.hom_sheaf
    return kernel(a_line, a_val, b_line, b_val, same, s)


def hom_dim(X: DecomposedObject, Y: DecomposedObject, t: int = 0) -> int:
    """dim Hom(X, Y[t]), additive over direct sums in both arguments."""
    total = 0
    for a, ma in X.summands:
        for b, mb in Y.summands:
            total += ma * mb * _hom_ind(a, b, t)
    return total
