"""Select the compiled kernels when available, the pure-Python ones otherwise.

Set ``BICLIQUES_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _fallback

impl = _fallback
if not os.environ.get("BICLIQUES_PURE"):
    try:
        from . import _speedups as impl  # type: ignore[no-redef]
    except ImportError:  # extension not built
        impl = _fallback

COMPILED = impl is not _fallback
MAX_SMALL = 64


def use(name: str) -> None:
    """Switch kernels at runtime: ``"compiled"`` or ``"pure"``."""
    global impl, COMPILED
    if name == "pure":
        impl = _fallback
    elif name == "compiled":
        from . import _speedups

        impl = _speedups
    else:
        raise ValueError(f"unknown kernel set {name!r}")
    COMPILED = impl is not _fallback


def backend() -> str:
    return "compiled" if COMPILED else "pure"
