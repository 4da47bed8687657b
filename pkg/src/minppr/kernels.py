"""Walk-kernel backend selection.

The compiled Cython kernel is preferred when it was built; otherwise the
scipy-backed fallback is used. ``MINPPR_KERNEL=python`` or
``MINPPR_KERNEL=compiled`` forces a choice at import time.
"""

import os

from . import _pykernel

_forced = os.environ.get("MINPPR_KERNEL", "").strip().lower()

if _forced == "python":
    _impl = _pykernel
    BACKEND = "python"
else:
    try:
        from . import _ckernel as _impl  # type: ignore[no-redef]
        BACKEND = "compiled"
    except ImportError:
        if _forced == "compiled":
            raise
        _impl = _pykernel
        BACKEND = "python"


def backend_name() -> str:
    """Name of the active kernel backend ('compiled' or 'python')."""
    return BACKEND


def make_stepper(n, in_indptr, in_indices, in_weights):
    """Stepper over the graph's in-adjacency CSR using the active backend."""
    return _impl.Stepper(n, in_indptr, in_indices, in_weights)
