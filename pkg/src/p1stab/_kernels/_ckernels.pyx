# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scalar kernels; same contract as ``_pykernels``."""

from libc.math cimport atan2, cos, exp, fabs, sin, M_PI

OUTSIDE = 0
INTERIOR = 1
BOUNDARY = 2


cpdef double lift_phase(double re, double im, double anchor):
    cdef double ca = cos(M_PI * anchor)
    cdef double sa = sin(M_PI * anchor)
    return anchor + atan2(im * ca - re * sa, re * ca + im * sa) / M_PI


cpdef double line_bundle_phase(long k, double za_re, double za_im,
                               double zb_re, double zb_im, double alpha,
                               double beta, double psi, double eps) except? -1e308:
    cdef double pt_re = za_re + zb_re
    cdef double pt_im = za_im + zb_im
    cdef double theta
    cdef long m
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


cpdef long hom_sheaf(bint a_line, long a_val, bint b_line, long b_val,
                     bint same_point, long t):
    cdef long d
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


cpdef bint strip_contains(double x, double y):
    return x <= 1.0 and (x - 0.5) * (x - 0.5) + y * y >= 0.25


cpdef double strip_offset(double zo_re, double zo_im, double zpt_re, double zpt_im):
    return -(zo_re * zpt_re + zo_im * zpt_im) / (zpt_re * zpt_re + zpt_im * zpt_im)


cpdef int k_region(double x, double y, double eps):
    cdef double f
    if y <= 0.0:
        return OUTSIDE
    if y >= 0.5 * M_PI:
        return INTERIOR
    f = cos(y) - exp(-fabs(x))
    if f > eps:
        return OUTSIDE
    if f < -eps:
        return INTERIOR
    return BOUNDARY
