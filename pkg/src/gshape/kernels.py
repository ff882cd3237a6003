"""Kernel backend selection.

The compiled extension is used when it imports; setting ``GSHAPE_PURE_PYTHON=1``
forces the numpy fallback.
"""

import os

from . import _pykernels

python_backend = _pykernels

if os.environ.get("GSHAPE_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
        BACKEND = "compiled"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

compiled_backend = _impl if BACKEND == "compiled" else None

fiber_counts = _impl.fiber_counts
count_coprime_ranges = _impl.count_coprime_ranges
