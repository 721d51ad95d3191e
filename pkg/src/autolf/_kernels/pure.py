"""Pure numpy implementations of the hot kernels.

These mirror ``_speedups.pyx`` exactly (same grids, same truncation rules)
so that the two backends agree to rounding.  The compiled backend is
selected automatically when available; see ``autolf._kernels``.
"""

import numpy as np

BACKEND = "pure"

# exp(-z) underflows to 0.0 a little above this; terms beyond contribute
# exactly nothing to the trapezoid sum.
_EXP_UNDERFLOW = 745.0

_CHUNK = 4096


def cosh_kernel_sum(nu, ys, h, n):
    """Trapezoid sum of exp(-y cosh t) cosh(nu t) on t = 0, h, ..., (n-1)h.

    Returns an array with one value per entry of ``ys`` (the t=0 node is
    weighted 1/2; the overall factor h is applied here).
    """
    nu = complex(nu)
    ys = np.asarray(ys, dtype=np.float64)
    t = np.arange(n) * h
    ct = np.cosh(t)
    g = np.cosh(nu * t)
    g[0] *= 0.5
    out = np.empty(ys.shape, dtype=np.complex128)
    for lo in range(0, ys.size, _CHUNK):
        hi = min(lo + _CHUNK, ys.size)
        block = ys[lo:hi, None] * ct[None, :]
        np.clip(block, None, _EXP_UNDERFLOW + 10.0, out=block)
        out[lo:hi] = np.exp(-block) @ g
    return h * out


def lattice_power_sum(s, x, y, radius):
    """Sum of ((m x + n)^2 + (m y)^2)^(-s) over the integer box.

    The box is max(|m|, |n|) <= radius with (m, n) = (0, 0) excluded.
    Requires y > 0 so the base never vanishes.  The rows m and -m contain
    the same multiset of bases (n runs over a symmetric range), so only
    m >= 1 is evaluated and doubled.
    """
    s = complex(s)
    r = int(radius)
    n = np.arange(-r, r + 1, dtype=np.float64)
    nz = n[n != 0.0]
    total = complex(np.sum(np.exp(-s * np.log(nz * nz))))
    for m in range(1, r + 1):
        base = (m * x + n) ** 2 + (m * y) ** 2
        total += 2.0 * complex(np.sum(np.exp(-s * np.log(base))))
    return total
