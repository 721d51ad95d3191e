"""Self-contained special functions and quadrature.

Everything downstream (coefficients, Gamma factors, Eisenstein series,
L-series, the Mellin oracle) evaluates through this layer.  Working
precision is binary64 throughout; the module boundary is what a wider
float type would have to re-implement.
"""

from .gamma import (
    complex_gamma,
    completed_zeta,
    log_gamma,
    lower_incomplete_gamma,
    riemann_zeta,
    upper_incomplete_gamma,
)
from .besselk import bessel_k, bessel_k_batch, bessel_k_check, bessel_k_error_floor
from .quadrature import QuadratureResult, gauss_legendre_panel, integrate_adaptive
from .oscillatory import exponential_mellin_closed_form, integrate_oscillatory_mellin

__all__ = [
    "QuadratureResult",
    "bessel_k",
    "bessel_k_batch",
    "bessel_k_check",
    "bessel_k_error_floor",
    "complex_gamma",
    "completed_zeta",
    "exponential_mellin_closed_form",
    "gauss_legendre_panel",
    "integrate_adaptive",
    "integrate_oscillatory_mellin",
    "log_gamma",
    "lower_incomplete_gamma",
    "riemann_zeta",
    "upper_incomplete_gamma",
]
