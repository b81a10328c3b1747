"""Kernel backend selection.

The compiled extension is preferred when it was built; otherwise the
pure-Python kernels are used.  ``GRIDGAPS_KERNELS=python|compiled``
forces a choice (``compiled`` raises if the extension is unavailable).
"""
from __future__ import annotations

import os
from types import ModuleType


def _load() -> ModuleType:
    choice = os.environ.get("GRIDGAPS_KERNELS", "auto")
    if choice == "python":
        from . import _kernels_py

        return _kernels_py
    try:
        from . import _kernels  # type: ignore[attr-defined]

        return _kernels
    except ImportError:
        if choice == "compiled":
            raise
        from . import _kernels_py

        return _kernels_py


kernels = _load()
BACKEND = kernels.BACKEND_NAME


def available_backends() -> dict[str, ModuleType]:
    """Every importable kernel backend, keyed by name (for benchmarks)."""
    from . import _kernels_py

    out: dict[str, ModuleType] = {"python": _kernels_py}
    try:
        from . import _kernels  # type: ignore[attr-defined]

        out["compiled"] = _kernels
    except ImportError:
        pass
    return out
