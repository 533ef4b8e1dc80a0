"""Select the compiled kernels when available, else the pure-Python ones.

Set ``PNSAT_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("PNSAT_PURE_PYTHON"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as kernels

BACKEND: str = kernels.BACKEND

__all__ = ["kernels", "BACKEND"]
