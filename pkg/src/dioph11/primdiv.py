"""Primitive-divisor screens.

Two filters decide whether a fixed prime ``p`` (11 for the main equation) can
occur as the only prime in a Lucas-type term:

* ``carmichael_screen`` for second-kind sequences ``X_m`` of a real quadratic
  unit: small indices are checked directly, large ones are ruled out because a
  primitive prime factor of ``X_m`` is congruent to +-1 modulo ``m``.
* ``congruence_screen`` for first-kind sequences with roots in Z[i]: a
  primitive divisor ``q`` of ``u_n`` satisfies ``q = (-1|q) (mod n)``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Optional

from . import pell
from .gaussian import GaussianInteger
from .ntheory import DomainError, is_power_of, is_prime, isqrt, legendre

# Carmichael: X_m has a primitive prime factor for every m above this index.
CARMICHAEL_THRESHOLD = 12
SUPPORTED_D = frozenset({2, 3, 33})


class Reason(str, enum.Enum):
    CARMICHAEL_LARGE_INDEX = "carmichael_large_index"
    CONGRUENCE_CONTRADICTION = "congruence_contradiction"
    DIRECT_CHECK = "direct_check"
    DEFECTIVE_TABLE_HIT = "defective_table_hit"


@dataclass(frozen=True)
class ScreenVerdict:
    excluded: bool
    reason: Optional[Reason] = None
    detail: str = ""

    def __post_init__(self) -> None:
        if self.excluded and self.reason is None:
            raise ValueError("an exclusion must carry a reason")


@dataclass(frozen=True)
class DirectCheck:
    m: int
    value: int
    exponent: Optional[int]  # e with value == p**e, else None


@dataclass(frozen=True)
class CarmichaelResult:
    verdict: ScreenVerdict
    checks: list[DirectCheck] = field(default_factory=list)
    min_exponent: int = 1

    @property
    def hits(self) -> list[DirectCheck]:
        return [c for c in self.checks if c.exponent is not None and c.exponent >= self.min_exponent]


def carmichael_screen(D: int, p: int, m_bound: int = CARMICHAEL_THRESHOLD,
                      min_exponent: int = 1) -> CarmichaelResult:
    """Can some ``X_m`` of ``x^2 - D*y^2 = +-1`` equal ``p**e`` with ``e >= min_exponent``?

    Every ``X_m`` with ``0 <= m <= m_bound`` is reported, including the trivial
    ``X_0 = 1``; only exponents at least ``min_exponent`` count as hits.
    """
    if D not in SUPPORTED_D:
        raise DomainError(f"D={D} is outside the supported set {sorted(SUPPORTED_D)}")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    xs = pell.x_sequence(D, "interleaved", m_bound + 1)
    checks = [DirectCheck(m, x, is_power_of(x, p)) for m, x in enumerate(xs)]
    hits = [c for c in checks if c.exponent is not None and c.exponent >= min_exponent]
    if hits:
        first = hits[0]
        return CarmichaelResult(
            ScreenVerdict(False, None, f"X_{first.m} = {first.value} = {p}^{first.exponent}"),
            checks, min_exponent,
        )
    if m_bound < CARMICHAEL_THRESHOLD:
        return CarmichaelResult(
            ScreenVerdict(False, None,
                          f"indices {m_bound + 1}..{CARMICHAEL_THRESHOLD} are neither checked "
                          "nor covered by the primitive divisor theorem"),
            checks, min_exponent,
        )
    # For m > m_bound, p = +-1 (mod m) means m divides p - 1 or p + 1.
    bad = [m for m in range(m_bound + 1, p + 2) if (p - 1) % m == 0 or (p + 1) % m == 0]
    if bad:
        return CarmichaelResult(
            ScreenVerdict(False, None, f"{p} = +-1 mod {bad[0]}; large-index branch inconclusive"),
            checks, min_exponent,
        )
    return CarmichaelResult(
        ScreenVerdict(True, Reason.CARMICHAEL_LARGE_INDEX,
                      f"X_m for m <= {m_bound} checked directly; for m > {m_bound} a primitive "
                      f"factor is +-1 mod m but {p} is not"),
        checks, min_exponent,
    )


def congruence_screen(p: int, n: int) -> ScreenVerdict:
    """Exclude ``p`` as a primitive divisor of ``u_n`` unless ``p = (-1|p) (mod n)``."""
    if n < 5 or not is_prime(n):
        raise DomainError(f"exponent must be a prime >= 5, got {n}")
    s = legendre(-1, p)
    if (p - s) % n:
        return ScreenVerdict(True, Reason.CONGRUENCE_CONTRADICTION,
                             f"(-1|{p}) = {s:+d} but {p} = {p % n} mod {n}")
    return ScreenVerdict(False, None, f"{p} = {s:+d} mod {n} is compatible")


@dataclass(frozen=True)
class LucasPairZi:
    """Lucas pair ``(alpha, conj(alpha))`` with ``alpha = u + iv`` and prime index ``n``."""

    alpha: GaussianInteger
    n: int

    def __post_init__(self) -> None:
        if self.alpha.im == 0:
            raise DomainError("alpha - conj(alpha) = 0: degenerate pair")
        if self.n < 5 or not is_prime(self.n):
            raise DomainError(f"index must be a prime >= 5, got {self.n}")

    @property
    def trace(self) -> int:
        return 2 * self.alpha.re

    @property
    def discriminant(self) -> int:
        return -4 * self.alpha.im ** 2


@lru_cache(maxsize=None)
def defective_table() -> tuple[tuple[int, int, int], ...]:
    """Rows ``(n, a, b)`` with ``alpha = (a + sqrt(b)) / 2``."""
    text = resources.files("dioph11").joinpath("data/defective_lucas_pairs.txt").read_text()
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            n, a, b = map(int, line.split())
            rows.append((n, a, b))
    return tuple(rows)


def defective_table_check(pair: LucasPairZi) -> bool:
    """True iff the pair matches a tabulated defective triple."""
    a, b = abs(pair.trace), pair.discriminant
    return any(n == pair.n and ta == a and tb == b for n, ta, tb in defective_table())


def gaussian_rows(n: int) -> list[tuple[int, int, int]]:
    """Table rows at index ``n`` whose roots lie in Z[i] (a even, -b/4 a square)."""
    out = []
    for tn, a, b in defective_table():
        if tn != n or a % 2 or b >= 0 or b % 4:
            continue
        v2 = -b // 4
        if isqrt(v2) ** 2 == v2:
            out.append((tn, a, b))
    return out
