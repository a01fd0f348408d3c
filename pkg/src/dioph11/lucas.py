"""Binary recurrences t(r+1) = P*t(r) - Q*t(r-1): exact terms and behaviour modulo m."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .ntheory import DomainError, is_power_of


@dataclass(frozen=True)
class BinaryRecurrence:
    """Recurrence seeded by its values at indices -1 and 0."""

    P: int
    Q: int
    t_m1: int
    t0: int

    def __post_init__(self) -> None:
        if self.Q == 0:
            raise DomainError("Q = 0 makes the recurrence first order")

    def iter_from(self, r: int) -> Iterator[tuple[int, int]]:
        """Yield ``(index, term)`` for index = r, r+1, ... without end."""
        if r >= -1:
            a, b, idx = self.t_m1, self.t0, -1
            while idx < r:
                a, b = b, self.P * b - self.Q * a
                idx += 1
        else:
            (a, b), idx = self.state_at(r), r
        while True:
            yield idx, a
            a, b = b, self.P * b - self.Q * a
            idx += 1

    def state_at(self, r: int) -> tuple[int, int]:
        """``(t(r), t(r+1))`` for ``r <= -1`` via the reversed recurrence."""
        if abs(self.Q) != 1:
            raise DomainError("negative indices need |Q| = 1")
        lo, hi = self.t_m1, self.t0
        idx = -1
        while idx > r:
            # t(r-1) = (P*t(r) - t(r+1)) / Q, and 1/Q = Q when |Q| = 1
            lo, hi = (self.P * lo - hi) * self.Q, lo
            idx -= 1
        return lo, hi


def term(seq: BinaryRecurrence, r: int) -> int:
    return next(seq.iter_from(r))[1]


def terms(seq: BinaryRecurrence, r_lo: int, r_hi: int) -> list[int]:
    """``[t(r) for r in range(r_lo, r_hi + 1)]``."""
    out = []
    if r_hi < r_lo:
        return out
    for idx, t in seq.iter_from(r_lo):
        out.append(t)
        if idx >= r_hi:
            break
    return out


def balanced(x: int, m: int) -> int:
    """Representative of ``x mod m`` in ``(-m/2, m/2]``."""
    r = x % m
    return r - m if r > m // 2 else r


class Cycle(NamedTuple):
    """Eventual period of the pair state ``(t(r), t(r+1)) mod m``.

    ``start`` is the first index from which the state sequence is periodic.
    When ``gcd(Q, m) = 1`` the sequence is purely periodic and ``start = -1``.
    """

    period: int
    start: int


def cycle_mod(seq: BinaryRecurrence, m: int) -> Cycle:
    if m < 2:
        raise DomainError(f"modulus must be >= 2, got {m}")
    P, Q = seq.P % m, seq.Q % m
    first = (seq.t_m1 % m, seq.t0 % m)
    if math.gcd(Q, m) == 1:
        a, b = first
        n = 0
        while True:
            a, b = b, (P * b - Q * a) % m
            n += 1
            if (a, b) == first:
                return Cycle(n, -1)
    seen = {first: -1}
    a, b = first
    idx = -1
    while True:
        a, b = b, (P * b - Q * a) % m
        idx += 1
        if (a, b) in seen:
            return Cycle(idx - seen[(a, b)], seen[(a, b)])
        seen[(a, b)] = idx


class Residues(NamedTuple):
    period: int
    residues: list[int]


def _state_mod(seq: BinaryRecurrence, m: int, r: int, cyc: Cycle) -> tuple[int, int]:
    """``(t(r), t(r+1)) mod m``, jumping over whole periods."""
    if cyc.start == -1:
        steps = (r + 1) % cyc.period
    elif r < -1:
        raise DomainError(f"index {r} precedes a non-periodic sequence start")
    elif r < cyc.start:
        steps = r + 1
    else:
        steps = cyc.start + 1 + (r - cyc.start) % cyc.period
    P, Q = seq.P % m, seq.Q % m
    a, b = seq.t_m1 % m, seq.t0 % m
    for _ in range(steps):
        a, b = b, (P * b - Q * a) % m
    return a, b


def residues_mod(seq: BinaryRecurrence, m: int, r_start: int = -1) -> Residues:
    """Minimal period of ``t mod m`` and one period of balanced residues from ``r_start``."""
    cyc = cycle_mod(seq, m)
    a, b = _state_mod(seq, m, r_start, cyc)
    P, Q = seq.P % m, seq.Q % m
    out = []
    for _ in range(cyc.period):
        out.append(balanced(a, m))
        a, b = b, (P * b - Q * a) % m
    return Residues(cyc.period, out)


class ZeroClasses(NamedTuple):
    period: int
    classes: frozenset


def zero_classes_mod(seq: BinaryRecurrence, m: int) -> ZeroClasses:
    """Classes ``c mod period`` such that ``m | t(r)`` whenever ``r = c (mod period)``.

    Only the periodic part of the sequence is described.
    """
    cyc = cycle_mod(seq, m)
    first = max(cyc.start, -1)
    res = residues_mod(seq, m, first).residues
    classes = frozenset((first + j) % cyc.period for j, rho in enumerate(res) if rho == 0)
    return ZeroClasses(cyc.period, classes)


def divisor_propagation(seq: BinaryRecurrence, q: int, target_class: int, target_mod: int) -> bool:
    """Decide whether ``q | t(r)`` for every ``r = target_class (mod target_mod)``.

    The joint pattern of ``(r mod target_mod, t(r) mod q)`` repeats with period
    ``lcm(target_mod, period mod q)``, so one window of that length is exhaustive.
    """
    if target_mod < 1:
        raise DomainError(f"target_mod must be >= 1, got {target_mod}")
    cyc = cycle_mod(seq, q)
    window = math.lcm(target_mod, cyc.period)
    r0 = max(cyc.start, -1)
    a, b = _state_mod(seq, q, r0, cyc)
    P, Q = seq.P % q, seq.Q % q
    for r in range(r0, r0 + window):
        if (r - target_class) % target_mod == 0 and a != 0:
            return False
        a, b = b, (P * b - Q * a) % q
    return True


def power_terms(seq: BinaryRecurrence, p: int, r_range: range) -> list[tuple[int, int]]:
    """``(r, e)`` for each ``r`` in ``r_range`` with ``|t(r)| = p**e``."""
    if not r_range:
        return []
    lo, hi = min(r_range), max(r_range)
    wanted = set(r_range)
    out = []
    for offset, t in enumerate(terms(seq, lo, hi)):
        r = lo + offset
        if r not in wanted:
            continue
        e = is_power_of(abs(t), p)
        if e is not None:
            out.append((r, e))
    return out
