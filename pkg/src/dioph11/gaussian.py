"""Arithmetic in the Gaussian integers Z[i]."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .ntheory import DomainError, iroot, isqrt


@dataclass(frozen=True)
class GaussianInteger:
    re: int
    im: int = 0

    def __add__(self, other: Union[GaussianInteger, int]) -> GaussianInteger:
        other = _coerce(other)
        return GaussianInteger(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: Union[GaussianInteger, int]) -> GaussianInteger:
        other = _coerce(other)
        return GaussianInteger(self.re - other.re, self.im - other.im)

    def __neg__(self) -> GaussianInteger:
        return GaussianInteger(-self.re, -self.im)

    def __mul__(self, other: Union[GaussianInteger, int]) -> GaussianInteger:
        other = _coerce(other)
        return GaussianInteger(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __pow__(self, e: int) -> GaussianInteger:
        return gpow(self, e)

    def __divmod__(self, other: GaussianInteger) -> tuple[GaussianInteger, GaussianInteger]:
        return euclid_divmod(self, _coerce(other))

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def conj(self) -> GaussianInteger:
        return GaussianInteger(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def divides(self, other: GaussianInteger) -> bool:
        if not self:
            return not other
        return not divmod(_coerce(other), self)[1]

    def normalized(self) -> GaussianInteger:
        """The associate with re > 0 and im >= 0 (zero maps to zero)."""
        z = self
        if not z:
            return z
        for _ in range(4):
            if z.re > 0 and z.im >= 0:
                return z
            z = z * I
        raise AssertionError("no canonical associate found")  # pragma: no cover

    def associates(self) -> tuple[GaussianInteger, ...]:
        return tuple(self * u for u in UNITS)

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        mag = "" if abs(self.im) == 1 else str(abs(self.im))
        if self.re == 0:
            return f"{'-' if self.im < 0 else ''}{mag}i"
        return f"{self.re}{'-' if self.im < 0 else '+'}{mag}i"


def _coerce(z: Union[GaussianInteger, int]) -> GaussianInteger:
    if isinstance(z, GaussianInteger):
        return z
    if isinstance(z, int):
        return GaussianInteger(z, 0)
    raise TypeError(f"cannot use {type(z).__name__} as a Gaussian integer")


ONE = GaussianInteger(1, 0)
I = GaussianInteger(0, 1)
UNITS = (ONE, I, GaussianInteger(-1, 0), GaussianInteger(0, -1))


def add(a: GaussianInteger, b: GaussianInteger) -> GaussianInteger:
    return a + b


def mul(a: GaussianInteger, b: GaussianInteger) -> GaussianInteger:
    return a * b


def conj(a: GaussianInteger) -> GaussianInteger:
    return a.conj()


def norm(a: GaussianInteger) -> int:
    return a.norm()


def _round_half_even(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if 2 * r > den or (2 * r == den and q % 2):
        q += 1
    return q


def euclid_divmod(a: GaussianInteger, b: GaussianInteger) -> tuple[GaussianInteger, GaussianInteger]:
    """Division with remainder, quotient rounded coordinatewise to nearest.

    The remainder satisfies ``norm(r) <= norm(b) / 2``.
    """
    if not b:
        raise ZeroDivisionError("Gaussian division by zero")
    n = b.norm()
    p = a * b.conj()
    q = GaussianInteger(_round_half_even(p.re, n), _round_half_even(p.im, n))
    return q, a - q * b


def gcd(a: GaussianInteger, b: GaussianInteger) -> GaussianInteger:
    """Greatest common divisor, normalized to re > 0, im >= 0."""
    if not a and not b:
        raise DomainError("gcd(0, 0) is undefined")
    while b:
        a, b = b, euclid_divmod(a, b)[1]
    return a.normalized()


def gpow(z: GaussianInteger, e: int) -> GaussianInteger:
    if e < 0:
        raise DomainError(f"negative exponent {e}")
    result, base = ONE, z
    while e:
        if e & 1:
            result = result * base
        base = base * base
        e >>= 1
    return result


# Module-level alias matching the operation name; shadows the builtin only here.
pow = gpow  # noqa: A001


def nth_root(target: GaussianInteger, n: int) -> Optional[GaussianInteger]:
    """Find a canonical beta with ``beta ** n`` an associate of ``target``.

    Bounded exhaustive search over the circle ``norm(beta) = norm(target) ** (1/n)``.
    """
    if n < 2:
        raise DomainError(f"root index must be >= 2, got {n}")
    if not target:
        raise DomainError("nth_root of zero")
    tn = target.norm()
    nb = iroot(tn, n)
    if nb ** n != tn:
        return None
    wanted = set(target.associates())
    for re in range(1, isqrt(nb) + 1):
        im2 = nb - re * re
        im = isqrt(im2)
        if im * im != im2:
            continue
        beta = GaussianInteger(re, im)
        if gpow(beta, n) in wanted:
            return beta
    return None


def imag_identity_rhs(u: int, v: int) -> int:
    """``v * (3u^2 - v^2)``: the imaginary part of ``(u + iv)^3``."""
    return v * (3 * u * u - v * v)
