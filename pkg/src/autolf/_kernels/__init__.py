"""Backend selection for the hot kernels.

The compiled Cython extension is preferred when it imported cleanly; the
numpy fallback is numerically equivalent (same grids and truncation rules)
but slower.  Set ``AUTOLF_PURE=1`` to force the fallback, e.g. for the
backend-comparison benchmark.
"""

import os

from . import pure as _pure

if os.environ.get("AUTOLF_PURE"):
    _impl = _pure
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

BACKEND = _impl.BACKEND
cosh_kernel_sum = _impl.cosh_kernel_sum
lattice_power_sum = _impl.lattice_power_sum

pure_backend = _pure


def compiled_backend():
    """Return the compiled module, or None if it is not importable."""
    try:
        from . import _speedups
    except ImportError:
        return None
    return _speedups
