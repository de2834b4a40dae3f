"""Kernel backend selection: compiled Jacobi if available, numpy fallback.

Set ``SKBMLFX_PURE=1`` to force the pure-Python path (used by the benchmark
and for debugging).
"""

import os

if os.environ.get("SKBMLFX_PURE"):
    from .jacobi_py import jacobi_sweeps

    BACKEND = "python"
else:
    try:
        from ._jacobi_c import jacobi_sweeps

        BACKEND = "compiled"
    except ImportError:
        from .jacobi_py import jacobi_sweeps

        BACKEND = "python"

__all__ = ["jacobi_sweeps", "BACKEND"]
