"""Backend selection for the search kernel.

The compiled extension handles chunks whose values fit in an unsigned 64-bit
word; anything larger, or any run with ``DIOPH11_PURE=1`` set, uses the
pure-Python kernel.
"""
from __future__ import annotations

import os

from . import _scan_py

try:
    if os.environ.get("DIOPH11_PURE"):
        raise ImportError("pure-Python backend forced")
    from . import _scan_ext
except ImportError:
    _scan_ext = None

BACKEND = "cython" if _scan_ext is not None else "python"
_WORD = 1 << 64


def fits_word(x_lo: int, x_hi: int, c: int) -> bool:
    return 0 <= x_lo and c >= 0 and (x_hi - 1) ** 2 + c < _WORD


def scan_offsets(x_lo: int, x_hi: int, c: int, n_min: int, n_max: int,
                 backend: str | None = None) -> list[tuple[int, int, int]]:
    """All ``(x, y, n)`` with ``x_lo <= x < x_hi`` and ``x^2 + c = y^n``, ``n_min <= n <= n_max``."""
    if x_hi <= x_lo:
        return []
    backend = backend or BACKEND
    if backend == "cython":
        if _scan_ext is None:
            raise RuntimeError("compiled scan kernel is not built")
        if fits_word(x_lo, x_hi, c) and n_min >= 2:
            return _scan_ext.scan_offsets(x_lo, x_hi, c, n_min, n_max)
    return _scan_py.scan_offsets(x_lo, x_hi, c, n_min, n_max)
