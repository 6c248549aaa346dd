"""Backend selection for the closure kernels.

The compiled extension is used when it imports; setting
``RETIC_PURE_PYTHON=1`` forces the numpy fallback.
"""
from __future__ import annotations

import os

from . import _fallback

BACKEND = "python"
cg_closure = _fallback.cg_closure
subuniverse_closure = _fallback.subuniverse_closure

if os.environ.get("RETIC_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        cg_closure = _kernels.cg_closure
        subuniverse_closure = _kernels.subuniverse_closure

__all__ = ["BACKEND", "cg_closure", "subuniverse_closure"]
