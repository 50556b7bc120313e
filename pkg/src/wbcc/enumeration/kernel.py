"""Selects the search kernel at import time.

The compiled kernel is used when the extension was built; otherwise (or when
``WBCC_PURE_PYTHON`` is set) the pure-Python kernel is used.  Both have the
signature ``search(n, flags, prefix=(), stop_depth=-1) -> (results, nodes)``
and return identical results.
"""

import os

from . import _pysearch

try:
    from . import _ckernel
except ImportError:  # extension not built
    _ckernel = None

KERNELS = {"python": _pysearch.search}
if _ckernel is not None:
    KERNELS["compiled"] = _ckernel.search

if _ckernel is not None and not os.environ.get("WBCC_PURE_PYTHON"):
    BACKEND = "compiled"
else:
    BACKEND = "python"

search = KERNELS[BACKEND]
free_cells = _pysearch.free_cells


def get_kernel(backend=None):
    """Search function for ``backend`` ("compiled" or "python"), default the selected one."""
    if backend is None:
        return search
    try:
        return KERNELS[backend]
    except KeyError:
        raise ValueError(f"kernel {backend!r} is not available; have {sorted(KERNELS)}") from None
