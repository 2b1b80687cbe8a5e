"""Pure-Python scalar kernels. Reference implementation and import fallback.

Every function here has a twin with the same signature in ``_ckernels.pyx``.
"""

from math import atan2, cos, exp, pi, sin

OUTSIDE = 0
INTERIOR = 1
BOUNDARY = 2

_HALF_PI = 0.5 * pi


def lift_phase(re, im, anchor):
    """Phase of ``re + i im`` lifted into ``(anchor - 1, anchor + 1]``."""
    ca = cos(pi * anchor)
    sa = sin(pi * anchor)
    return anchor + atan2(im * ca - re * sa, re * ca + im * sa) / pi


def line_bundle_phase(k, za_re, za_im, zb_re, zb_im, alpha, beta, psi, eps):
    """Phase of ``O(i + k)`` in a geometric or wall condition based at ``i``.

    ``za``/``zb`` are the charges of ``O(i)`` and ``O(i-1)[1]``; ``psi`` is the
    lifted torsion phase. The lift is checked against the slice it must land
    in; a miss means the inputs were not geometric.
    """
    pt_re = za_re + zb_re
    pt_im = za_im + zb_im
    if k >= 0:
        theta = lift_phase(za_re + k * pt_re, za_im + k * pt_im, alpha)
        if theta < alpha - eps or theta > psi + eps:
            raise ArithmeticError(f"lift {theta!r} outside [{alpha!r}, {psi!r})")
        return theta
    m = -k - 1
    theta = lift_phase(zb_re + m * pt_re, zb_im + m * pt_im, beta)
    if theta < psi - eps or theta > beta + eps:
        raise ArithmeticError(f"lift {theta!r} outside ({psi!r}, {beta!r}]")
    return theta - 1.0


def hom_sheaf(a_line, a_val, b_line, b_val, same_point, t):
    """dim Ext^t between indecomposable sheaves on P^1.

    For a line bundle ``*_val`` is the twist, for torsion it is the length.
    """
    if t == 0:
        if a_line:
            if b_line:
                d = b_val - a_val + 1
                return d if d > 0 else 0
            return b_val
        if b_line:
            return 0
        if same_point:
            return a_val if a_val < b_val else b_val
        return 0
    if t == 1:
        if a_line:
            if b_line:
                d = a_val - b_val - 1
                return d if d > 0 else 0
            return 0
        if b_line:
            return a_val
        if same_point:
            return a_val if a_val < b_val else b_val
        return 0
    return 0


def strip_contains(x, y):
    """Whether ``Z(O) = x + iy`` lies in the strip of a normalized condition."""
    return x <= 1.0 and (x - 0.5) * (x - 0.5) + y * y >= 0.25


def strip_offset(zo_re, zo_im, zpt_re, zpt_im):
    """Real ``t`` with ``Z(O(n))`` in the strip exactly for ``n`` in ``[t, t+1]``."""
    return -(zo_re * zpt_re + zo_im * zpt_im) / (zpt_re * zpt_re + zpt_im * zpt_im)


def k_region(x, y, eps):
    if y <= 0.0:
        return OUTSIDE
    if y >= _HALF_PI:
        return INTERIOR
    f = cos(y) - exp(-abs(x))
    if f > eps:
        return OUTSIDE
    if f < -eps:
        return INTERIOR
    return BOUNDARY
