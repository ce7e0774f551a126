"""Pick the compiled kernel when available, else the pure-Python one.

Set ``CHIPBN_PURE=1`` to force the fallback.
"""
from __future__ import annotations

import os

from . import _pykernel

if os.environ.get("CHIPBN_PURE", "") not in ("", "0"):
    Kernel = _pykernel.Kernel
    BACKEND = "python"
else:
    try:
        from ._ckernel import Kernel  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        Kernel = _pykernel.Kernel
        BACKEND = "python"

PyKernel = _pykernel.Kernel
