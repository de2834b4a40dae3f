"""Multi-level feature extraction and transmission planning for remote
zero-shot recognition."""

from ._kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"
__all__ = ["KERNEL_BACKEND", "__version__"]
