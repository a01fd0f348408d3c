"""Pell-type equations X^2 - D*Y^2 = N and their unit orbits in Z[sqrt(D)].

Only the machinery needed for the three instances (33, 3), (3, 1) and
(2, +-1) is provided: continued fractions for the fundamental unit, bounded
search for base solutions, and orbit generation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .ntheory import DomainError, isqrt

SignPolicy = Literal["interleaved", "positive"]


@dataclass(frozen=True)
class PellProblem:
    D: int
    N: int = 1

    def __post_init__(self) -> None:
        if self.D < 2 or isqrt(self.D) ** 2 == self.D:
            raise DomainError(f"D must be a positive non-square >= 2, got {self.D}")
        if self.N == 0:
            raise DomainError("N must be nonzero")


@dataclass(frozen=True)
class QuadPair:
    """``x + y*sqrt(D)``; ``D`` is supplied by the caller."""

    x: int
    y: int

    def norm(self, D: int) -> int:
        return self.x * self.x - D * self.y * self.y

    def mul(self, other: QuadPair, D: int) -> QuadPair:
        return QuadPair(
            self.x * other.x + D * self.y * other.y,
            self.x * other.y + self.y * other.x,
        )

    def conj(self) -> QuadPair:
        return QuadPair(self.x, -self.y)

    def as_tuple(self) -> tuple[int, int]:
        return (self.x, self.y)


def cf_sqrt(D: int) -> tuple[int, list[int]]:
    """Continued fraction of sqrt(D) as ``(a0, minimal period)``."""
    a0 = isqrt(D)
    if D < 2 or a0 * a0 == D:
        raise DomainError(f"sqrt({D}) is rational")
    m, d, a = 0, 1, a0
    period = []
    while a != 2 * a0:
        m = d * a - m
        d = (D - m * m) // d
        a = (a0 + m) // d
        period.append(a)
    return a0, period


def fundamental_unit(D: int) -> tuple[QuadPair, int]:
    """Smallest ``(x, y)`` with ``x, y >= 1`` and ``x^2 - D*y^2 = +-1``, and that norm."""
    a0, period = cf_sqrt(D)
    # Convergent p/q after the last partial quotient before the period closes.
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    for a in period[:-1]:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
    sol = QuadPair(p, q)
    n = sol.norm(D)
    assert n in (1, -1), (D, sol, n)
    return sol, n


def positive_unit(D: int) -> QuadPair:
    """Fundamental solution of ``x^2 - D*y^2 = 1``."""
    eps, n = fundamental_unit(D)
    return eps if n == 1 else eps.mul(eps, D)


def orbit(base: QuadPair, unit: QuadPair, D: int, count: int) -> list[QuadPair]:
    """``[base * unit**r for r in range(count)]`` expanded in Z[sqrt(D)]."""
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    if unit.norm(D) not in (1, -1):
        raise DomainError(f"{unit} is not a unit of Z[sqrt({D})]")
    out = [base]
    for _ in range(count - 1):
        out.append(out[-1].mul(unit, D))
    return out


def x_sequence(D: int, sign_policy: SignPolicy = "interleaved", count: int = 13) -> list[int]:
    """X-coordinates ``X_0 = 1, X_1, X_2, ...`` of the powers of the fundamental unit.

    With ``"interleaved"`` the fundamental unit itself is used, so a norm -1
    unit alternates between solutions of ``X^2 - D*Y^2 = -1`` and ``= 1``.
    ``"positive"`` uses the norm +1 unit and yields only solutions of ``= 1``.
    """
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    if sign_policy == "interleaved":
        unit, eps = fundamental_unit(D)
    elif sign_policy == "positive":
        unit, eps = positive_unit(D), 1
    else:
        raise DomainError(f"unknown sign policy {sign_policy!r}")
    xs = [1, unit.x]
    while len(xs) < count:
        xs.append(2 * unit.x * xs[-1] - eps * xs[-2])
    return xs[:count]


def search_bound(problem: PellProblem) -> int:
    """Upper bound on ``y`` for base solutions: ceil(sqrt(x1 * |N|)).

    ``x1`` is taken from the norm +1 unit, which makes the bound dominate the
    classical Nagell bounds for both signs of ``N``.
    """
    t = positive_unit(problem.D).x * abs(problem.N)
    r = isqrt(t)
    return r if r * r == t else r + 1


def base_solutions(problem: PellProblem) -> list[QuadPair]:
    """All ``(x, y)`` with ``x >= 0``, ``0 <= y <= search_bound`` solving the equation."""
    D, N = problem.D, problem.N
    out = []
    for y in range(search_bound(problem) + 1):
        t = N + D * y * y
        if t < 0:
            continue
        x = isqrt(t)
        if x * x == t:
            out.append(QuadPair(x, y))
    return out


def family(problem: PellProblem, r_min: int, r_max: int) -> list[tuple[int, QuadPair, QuadPair]]:
    """``(r, base, base * unit**r)`` for every base solution and ``r_min <= r <= r_max``.

    Negative ``r`` multiplies by the conjugate (inverse) of the norm +1 unit.
    """
    D = problem.D
    unit = positive_unit(D)
    out = []
    for base in base_solutions(problem):
        cur = base
        ups = {0: base}
        for r in range(1, r_max + 1):
            cur = cur.mul(unit, D)
            ups[r] = cur
        cur = base
        inv = unit.conj()
        for r in range(-1, r_min - 1, -1):
            cur = cur.mul(inv, D)
            ups[r] = cur
        for r in range(r_min, r_max + 1):
            out.append((r, base, ups[r]))
    return out
