"""Modified Bessel function K_nu(y) for complex order and real y > 0.

The integral representation

    K_nu(y) = integral_0^inf exp(-y cosh t) cosh(nu t) dt

has a doubly-exponentially decaying, analytic integrand, so the plain
trapezoid rule on an equispaced t-grid converges geometrically once the
step keeps the discretization error below target inside the strip of
analyticity.  The step rule accounts for the three competing effects:

  * strip growth of exp(-y cosh(t + i b)) like exp(y (1 - cos b)),
  * oscillation of cosh(nu t) like exp(|Im nu| b) on the shifted line,
  * the 2 pi b / h gain of the trapezoid rule.

For purely imaginary orders the result is exponentially smaller than the
integrand peak (ratio ~ exp(pi |Im nu|/2 - y)), which is an intrinsic
cancellation: the attainable relative error in binary64 is about
eps * exp(max(0, pi |Im nu|/2 - y)).  ``bessel_k_error_floor`` reports it.
"""

import math
import warnings

import numpy as np

from .. import _kernels
from ..errors import DomainError, UnderflowWarning

_TARGET_EXP = 45.0  # aim the discretization error at exp(-45)
_BETAS = np.linspace(0.2, 1.25, 22)


def _step_and_cutoff(nu, y_min, y_max):
    """Shared trapezoid step and truncation point for a batch of y values."""
    im = abs(nu.imag)
    re = abs(nu.real)
    # widest admissible step over the trial strip heights, at the least
    # favorable (largest) y of the batch
    h = 0.0
    for b in _BETAS:
        trial = 2.0 * math.pi * b / (y_max * (1.0 - math.cos(b)) + im * b + _TARGET_EXP)
        h = max(h, trial)
    h = min(h, 0.3)
    # truncate once exp(-y cosh T) is ~exp(-48) below the peak exp(-y),
    # with headroom for cosh(Re nu * T) growth
    t_cut = math.acosh(1.0 + (48.0 + 8.0 * re + 2.0 * im) / y_min)
    return h, t_cut


def bessel_k_batch(nu, ys):
    """K_nu at an array of y > 0, one shared quadrature grid.

    Entries with y large enough that exp(-y) underflows are returned as 0
    (flagged via UnderflowWarning).
    """
    nu = complex(nu)
    ys = np.asarray(ys, dtype=np.float64)
    if ys.size == 0:
        return np.empty(0, dtype=np.complex128)
    if np.any(ys <= 0.0):
        raise DomainError("bessel_k requires y > 0")
    out = np.zeros(ys.shape, dtype=np.complex128)
    live = ys < 690.0
    if not np.all(live):
        warnings.warn("K_nu underflows for y >= 690; returning 0 there",
                      UnderflowWarning)
    if not np.any(live):
        return out
    ys_live = ys[live]
    h, t_cut = _step_and_cutoff(nu, float(ys_live.min()), float(ys_live.max()))
    n = int(math.ceil(t_cut / h)) + 2
    out[live] = _kernels.cosh_kernel_sum(nu, ys_live, h, n)
    return out


def bessel_k(nu, y):
    """K_nu(y) for complex nu, real y > 0.

    Relative accuracy ~1e-12 whenever the cancellation floor allows
    (always, for |Im nu| <= ~15 at the y ranges this package uses).
    """
    return complex(bessel_k_batch(nu, np.array([float(y)]))[0])


def bessel_k_error_floor(nu, y):
    """Best attainable relative error of the cosh-integral in binary64."""
    nu = complex(nu)
    return math.exp(max(0.0, math.pi * abs(nu.imag) / 2.0 - float(y))) * 2.3e-16


def bessel_k_check(nu, y):
    """(value, relative error estimate) via step halving; for diagnostics."""
    nu = complex(nu)
    y = float(y)
    h, t_cut = _step_and_cutoff(nu, y, y)
    ys = np.array([y])
    coarse = complex(_kernels.cosh_kernel_sum(nu, ys, h, int(math.ceil(t_cut / h)) + 2)[0])
    fine = complex(_kernels.cosh_kernel_sum(nu, ys, h / 2.0, int(math.ceil(t_cut / (h / 2.0))) + 2)[0])
    denom = max(abs(fine), 1e-300)
    return fine, abs(fine - coarse) / denom
