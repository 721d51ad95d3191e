# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: the K-Bessel trapezoid sum and the Eisenstein
lattice sum.  Must stay numerically identical (same grid, same truncation
rule) to the numpy fallback in ``pure.py``."""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, cosh, exp, log, sin

cnp.import_array()

BACKEND = "compiled"

cdef double _EXP_UNDERFLOW = 745.0


def cosh_kernel_sum(nu, ys, double h, Py_ssize_t n):
    """Trapezoid sum of exp(-y cosh t) cosh(nu t) on t = 0, h, ..., (n-1)h."""
    cdef double complex cnu = nu
    cdef cnp.ndarray[cnp.float64_t, ndim=1] yarr = np.ascontiguousarray(ys, dtype=np.float64)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] out = np.empty(yarr.shape[0], dtype=np.complex128)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ct = np.empty(n, dtype=np.float64)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] g = np.empty(n, dtype=np.complex128)
    cdef Py_ssize_t i, j
    cdef double t, y, a
    cdef double complex acc

    for j in range(n):
        t = j * h
        ct[j] = cosh(t)
        g[j] = _ccosh(cnu * t)
    g[0] = 0.5 * g[0]

    for i in range(yarr.shape[0]):
        y = yarr[i]
        acc = 0
        for j in range(n):
            a = y * ct[j]
            if a > _EXP_UNDERFLOW + 10.0:
                a = _EXP_UNDERFLOW + 10.0
            acc = acc + exp(-a) * g[j]
        out[i] = h * acc
    return out


cdef inline double complex _ccosh(double complex z):
    cdef double re = z.real, im = z.imag
    return cosh(re) * cos(im) + 1j * (_sinh(re) * sin(im))


cdef inline double _sinh(double x):
    return (exp(x) - exp(-x)) / 2.0 if (x < 350.0 and x > -350.0) else (exp(x) / 2.0 if x > 0 else -exp(-x) / 2.0)


def lattice_power_sum(s, double x, double y, Py_ssize_t radius):
    """Sum of ((m x + n)^2 + (m y)^2)^(-s) over max(|m|,|n|) <= radius, (m,n) != 0."""
    cdef double complex cs = s
    cdef double sr = cs.real, si = cs.imag
    cdef double complex total = 0
    cdef Py_ssize_t m, n
    cdef double base, lg, mag
    cdef double mx, my2

    for n in range(1, radius + 1):
        lg = log(<double> n * <double> n)
        total = total + 2.0 * _cpow_from_log(lg, sr, si)
    for m in range(1, radius + 1):
        mx = m * x
        my2 = (m * y) * (m * y)
        for n in range(-radius, radius + 1):
            base = (mx + n) * (mx + n) + my2
            total = total + 2.0 * _cpow_from_log(log(base), sr, si)
    return complex(total)


cdef inline double complex _cpow_from_log(double lg, double sr, double si):
    # exp(-s log(base)) with base > 0
    cdef double mag = exp(-sr * lg)
    cdef double ph = -si * lg
    return mag * (cos(ph) + 1j * sin(ph))
