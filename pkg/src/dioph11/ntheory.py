"""Exact integer primitives: roots, perfect powers, Legendre symbols, trial division."""
from __future__ import annotations

import math
from functools import lru_cache
from typing import NamedTuple, Optional


class DomainError(ValueError):
    """Raised when an argument lies outside an operation's domain."""


# Deterministic Miller-Rabin witnesses, valid for n < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def isqrt(n: int) -> int:
    """Return floor(sqrt(n)) for n >= 0."""
    if n < 0:
        raise DomainError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def iroot(n: int, k: int) -> int:
    """Return floor(n ** (1/k)) for n >= 0 and k >= 1, using integer Newton steps."""
    if n < 0:
        raise DomainError(f"iroot of negative number {n}")
    if k < 1:
        raise DomainError(f"root index must be >= 1, got {k}")
    if k == 1 or n < 2:
        return n
    if k == 2:
        return math.isqrt(n)
    # Start above the root; Newton from above decreases monotonically.
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    # post-correction
    while x ** k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=256)
def primes_up_to(bound: int) -> tuple[int, ...]:
    if bound < 2:
        return ()
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def perfect_power(n: int) -> Optional[tuple[int, int]]:
    """Return ``(base, exp)`` with ``exp >= 2`` maximal and ``base ** exp == n``.

    Returns ``None`` when ``n`` is not a perfect power. Because the exponent is
    maximal, ``n`` is a ``d``-th power exactly when ``d`` divides ``exp``.
    """
    if n < 2:
        raise DomainError(f"perfect_power needs n >= 2, got {n}")
    base, exp = n, 1
    found = True
    while found:
        found = False
        for p in primes_up_to(base.bit_length()):
            r = iroot(base, p)
            if r ** p == base:
                base, exp = r, exp * p
                found = True
                break
    if exp == 1:
        return None
    return base, exp


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a | p) by Euler's criterion."""
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise DomainError(f"legendre needs an odd prime modulus, got {p}")
    r = pow(a % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


class Factorization(NamedTuple):
    factors: list[tuple[int, int]]
    cofactor: Optional[int]

    def value(self) -> int:
        out = 1 if self.cofactor is None else self.cofactor
        for p, e in self.factors:
            out *= p ** e
        return out


def trial_factor(n: int, bound: int) -> Factorization:
    """Factor ``n`` by trial division up to ``bound``.

    A leftover greater than ``bound ** 2`` cannot be certified prime and is
    returned as ``cofactor``; a smaller leftover is prime and joins ``factors``.
    """
    if n < 2:
        raise DomainError(f"trial_factor needs n >= 2, got {n}")
    if bound < 2:
        raise DomainError(f"trial_factor needs bound >= 2, got {bound}")
    factors = []
    d = 2
    while d <= bound and d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    cofactor = None
    if n > 1:
        if n <= bound * bound:
            factors.append((n, 1))
        else:
            cofactor = n
    return Factorization(factors, cofactor)


def is_power_of(n: int, p: int) -> Optional[int]:
    """Return ``e`` with ``p ** e == n``, or ``None``."""
    if n < 1:
        return None
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e if n == 1 else None


def valuation(n: int, p: int) -> int:
    """Exponent of ``p`` in nonzero ``n``."""
    if n == 0:
        raise DomainError("valuation of zero")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e
