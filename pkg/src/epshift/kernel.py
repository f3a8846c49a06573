"""Kernel backend selection.

Imports the compiled kernel when available, otherwise the pure-Python one.
Set ``EPSHIFT_PURE=1`` to force the pure backend.
"""

import os

if os.environ.get("EPSHIFT_PURE", "") not in ("", "0"):
    from . import _kernel_py as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

BACKEND = "compiled" if _impl.__name__.endswith("_speedups") else "pure"

canon = _impl.canon
member = _impl.member
window = _impl.window
shift = _impl.shift
intersect = _impl.intersect
union = _impl.union
subset = _impl.subset
exists_shift_subset = _impl.exists_shift_subset
