"""Kernel backend selection: compiled extension if available, else pure Python.

Set FOLDMAP_PURE=1 in the environment to force the pure-Python kernels
(useful for the benchmark and for debugging the extension).
"""

import os

if os.environ.get("FOLDMAP_PURE"):
    from . import _kernel as kernel
else:
    try:
        from . import _speedups as kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel as kernel

add_terms = kernel.add_terms
scale_terms = kernel.scale_terms
mul_terms = kernel.mul_terms


def backend_name() -> str:
    return kernel.BACKEND
