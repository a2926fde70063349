"""Kernel backend selection.

The compiled extension is used when it imports; set ``REENTRY_PURE_PYTHON=1``
to force the pure-Python kernels.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    if os.environ.get("REENTRY_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure Python requested")
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

default = _compiled if _compiled is not None else _pykernels
BACKEND = default.NAME

# objectives handed to the compiled kernels must stay below this
INT64_SAFE = 2**62


def get(name: str | None = None):
    if name is None:
        return default
    if name == "python":
        return _pykernels
    if name == "cython":
        if _compiled is None:
            raise ImportError("compiled kernels are not built")
        return _compiled
    raise ValueError(f"unknown backend {name!r}")


def available() -> list[str]:
    return ["python"] + (["cython"] if _compiled is not None else [])
