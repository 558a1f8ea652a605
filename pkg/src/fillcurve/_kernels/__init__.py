"""Kernel selection: compiled core with a pure-Python fallback.

``impl`` is the module the rest of the package uses. The compiled
``fastpoly`` extension is preferred; if it failed to build (or the
environment variable FILLCURVE_PURE is set to a non-empty value other
than "0") the ``purepoly`` reference implementation is used instead.
Both expose the same functions; ``impl.IMPL`` is "fast" or "pure".
"""

import os

from . import purepoly

impl = purepoly
if os.environ.get("FILLCURVE_PURE", "0").strip() in ("", "0"):
    try:
        from . import fastpoly as impl  # type: ignore[no-redef]
    except ImportError:
        impl = purepoly


def fast_available() -> bool:
    try:
        from . import fastpoly  # noqa: F401
    except ImportError:
        return False
    return True
