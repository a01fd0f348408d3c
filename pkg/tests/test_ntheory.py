import math

import pytest
from hypothesis import given, strategies as st

from dioph11.ntheory import (
    DomainError, iroot, is_power_of, is_prime, isqrt, legendre, perfect_power, trial_factor,
)


def brute_perfect_powers(limit):
    """Map n -> maximal exponent for every perfect power n <= limit."""
    best = {}
    b = 2
    while b * b <= limit:
        v, e = b * b, 2
        while v <= limit:
            best[v] = max(best.get(v, 0), e)
            v *= b
            e += 1
        b += 1
    return best


def test_isqrt_examples():
    assert isqrt(0) == 0
    assert isqrt(125) == 11
    assert isqrt(210044879 ** 2) == 210044879
    with pytest.raises(DomainError):
        isqrt(-1)


def test_isqrt_exhaustive():
    for n in range(10 ** 6 + 1):
        r = isqrt(n)
        assert r * r <= n < (r + 1) * (r + 1)


@given(st.integers(0, 10 ** 60), st.integers(1, 12))
def test_iroot_bracket(n, k):
    r = iroot(n, k)
    assert r ** k <= n < (r + 1) ** k


def test_perfect_power_examples():
    assert perfect_power(125) == (5, 3)
    assert 605 ** 3 == 2662 ** 2 + 11 ** 8 == 221445125
    assert perfect_power(221445125) == (605, 3)
    assert perfect_power(7) is None
    assert perfect_power(64) == (2, 6)
    with pytest.raises(DomainError):
        perfect_power(1)


def test_perfect_power_matches_enumeration():
    limit = 2 * 10 ** 5
    best = brute_perfect_powers(limit)
    for n in range(2, limit + 1):
        pp = perfect_power(n)
        if n in best:
            assert pp is not None and pp[1] == best[n] and pp[0] ** pp[1] == n
        else:
            assert pp is None


@pytest.mark.parametrize("b", range(2, 51))
def test_perfect_power_property(b):
    for e in range(2, 11):
        base, exp = perfect_power(b ** e)
        assert base ** exp == b ** e and exp >= e


def test_legendre_examples():
    assert legendre(-1, 11) == -1
    assert legendre(-1, 5) == 1
    assert legendre(4, 7) == 1
    assert legendre(22, 11) == 0
    for bad in (2, 9, 1, -3, 15):
        with pytest.raises(DomainError):
            legendre(1, bad)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 373])
def test_legendre_matches_square_table(p):
    squares = {x * x % p for x in range(1, p)}
    for a in range(p):
        expected = 0 if a == 0 else (1 if a in squares else -1)
        assert legendre(a, p) == expected


@given(st.integers(-10 ** 9, 10 ** 9), st.integers(-10 ** 9, 10 ** 9), st.sampled_from([5, 11, 13]))
def test_legendre_multiplicative(a, b, p):
    assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)


def test_trial_factor_examples():
    assert trial_factor(210044879, 10 ** 6).factors == [(11, 1), (373, 1), (51193, 1)]
    assert trial_factor(121, 100).factors == [(11, 2)]
    assert 11 ** 6 == 1771561
    assert trial_factor(1771561, 100) == ([(11, 6)], None)
    with pytest.raises(DomainError):
        trial_factor(1, 10)


def test_trial_factor_reports_unproven_cofactor():
    big = 1000003 * 1000033
    f = trial_factor(2 * big, 100)
    assert f.factors == [(2, 1)] and f.cofactor == big


@given(st.integers(2, 10 ** 8), st.integers(2, 2000))
def test_trial_factor_recombines(n, bound):
    f = trial_factor(n, bound)
    assert f.value() == n
    assert all(is_prime(p) for p, _ in f.factors)
    if f.cofactor is not None:
        assert f.cofactor > bound * bound


def test_is_power_of():
    assert is_power_of(1, 11) == 0
    assert is_power_of(14641, 11) == 4
    assert is_power_of(210044879, 11) is None
    assert is_power_of(0, 11) is None


def test_is_prime_against_sieve():
    limit = 20000
    sieve = [True] * (limit + 1)
    sieve[0] = sieve[1] = False
    for i in range(2, math.isqrt(limit) + 1):
        for j in range(i * i, limit + 1, i):
            sieve[j] = False
    assert [n for n in range(limit + 1) if is_prime(n)] == [n for n in range(limit + 1) if sieve[n]]
