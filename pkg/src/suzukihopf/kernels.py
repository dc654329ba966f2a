"""Kernel selection: the compiled search kernel when built, else the Python one.

Set SUZUKIHOPF_PURE_PYTHON=1 to force the fallback.
"""

import os

from . import _pykernel

python_search = _pykernel.search

try:
    from . import _ckernel
except ImportError:  # extension not built
    _ckernel = None

compiled_search = _ckernel.search if _ckernel is not None else None

if compiled_search is not None and os.environ.get("SUZUKIHOPF_PURE_PYTHON", "") in ("", "0"):
    search = compiled_search
    BACKEND = "cython"
else:
    search = python_search
    BACKEND = "python"
