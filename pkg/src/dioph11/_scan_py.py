"""Pure-Python scan kernel; the reference path and the fallback when the extension is absent."""
from __future__ import annotations

from .ntheory import perfect_power


def scan_offsets(x_lo: int, x_hi: int, c: int, n_min: int, n_max: int) -> list[tuple[int, int, int]]:
    """All ``(x, y, n)`` with ``x_lo <= x < x_hi``, ``n_min <= n <= n_max`` and ``x^2 + c = y^n``."""
    out = []
    x = x_lo
    v = x * x + c
    while x < x_hi:
        if v >= 2:
            pp = perfect_power(v)
            if pp is not None:
                base, e = pp
                for n in range(n_min, n_max + 1):
                    if e % n == 0:
                        out.append((x, base ** (e // n), n))
        elif v == 1:
            out.extend((x, 1, n) for n in range(n_min, n_max + 1))
        # (x+1)^2 + c = x^2 + c + 2x + 1
        v += 2 * x + 1
        x += 1
    return out
