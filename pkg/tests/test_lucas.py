import math

import pytest

from dioph11.lucas import (
    BinaryRecurrence, balanced, cycle_mod, divisor_propagation, power_terms, residues_mod, term,
    terms, zero_classes_mod,
)
from dioph11.ntheory import DomainError

Y = BinaryRecurrence(46, 1, -1, 1)


def naive_terms(seq, lo, hi):
    """Terms by forward iteration from index -1, then backward by explicit division."""
    vals = {-1: seq.t_m1, 0: seq.t0}
    for r in range(1, hi + 1):
        vals[r] = seq.P * vals[r - 1] - seq.Q * vals[r - 2]
    for r in range(-2, lo - 1, -1):
        num = seq.P * vals[r + 1] - vals[r + 2]
        assert num % seq.Q == 0
        vals[r] = num // seq.Q
    return [vals[r] for r in range(lo, hi + 1)]


def test_term_examples():
    assert term(Y, 5) == 210044879
    assert term(Y, 0) == 1
    assert term(Y, 1) == 47
    assert term(Y, -1) == -1


def test_terms_match_naive():
    assert terms(Y, -25, 40) == naive_terms(Y, -25, 40)
    seq = BinaryRecurrence(3, -1, 2, 5)
    assert terms(seq, -10, 10) == naive_terms(seq, -10, 10)


def test_negative_index_needs_unit_q():
    with pytest.raises(DomainError):
        term(BinaryRecurrence(3, 2, 0, 1), -3)
    assert term(BinaryRecurrence(3, 2, 0, 1), 4) == naive_terms(BinaryRecurrence(3, 2, 0, 1), 0, 4)[-1]


def test_recurrence_holds():
    for r in range(-1, 51):
        assert term(Y, r + 1) == 46 * term(Y, r) - term(Y, r - 1)


def test_sign_symmetry():
    for j in range(21):
        assert term(Y, -1 - j) == -term(Y, j)


def test_residues_mod_11():
    res = residues_mod(Y, 11, -1)
    assert res.period == 11
    assert res.residues == [-1, 1, 3, 5, -4, -2, 0, 2, 4, -5, -3]


def test_residues_mod_2_parity():
    res = residues_mod(Y, 2, -1)
    assert all(r == 1 for r in res.residues)
    assert all(t % 2 == 1 for t in terms(Y, -1, 10))


def test_residues_mod_373_zero_at_5():
    res = residues_mod(Y, 373, 0)
    assert res.residues[5 % res.period] == 0


@pytest.mark.parametrize("m", [11, 373, 51193])
def test_residues_agree_with_terms(m):
    res = residues_mod(Y, m, -1)
    exact = terms(Y, -1, -1 + 2 * res.period - 1)
    for j, t in enumerate(exact):
        assert res.residues[j % res.period] == balanced(t, m)


@pytest.mark.parametrize("r_start", [-40, -3, 0, 7, 1000])
def test_residues_any_start(r_start):
    res = residues_mod(Y, 13, r_start)
    exact = terms(Y, r_start, r_start + res.period - 1) if r_start < 100 else None
    if exact is not None:
        assert res.residues == [balanced(t, 13) for t in exact]
    else:
        shifted = residues_mod(Y, 13, r_start % res.period)
        assert res.residues == shifted.residues


def test_period_is_minimal():
    for m in (7, 11, 12, 373):
        cyc = cycle_mod(Y, m)
        ts = [t % m for t in terms(Y, -1, 3 * cyc.period)]
        for d in range(1, cyc.period):
            assert any(ts[i] != ts[i + d] or ts[i + 1] != ts[i + 1 + d] for i in range(cyc.period))


def test_preperiodic_sequence():
    # Q = 2 shares a factor with m = 4: t(r) = 2^(r+1) is eventually 0 mod 4
    seq = BinaryRecurrence(3, 2, 1, 2)
    assert terms(seq, -1, 4) == [1, 2, 4, 8, 16, 32]
    cyc = cycle_mod(seq, 4)
    assert cyc.period == 1 and cyc.start == 1
    zc = zero_classes_mod(seq, 4)
    assert zc.period == 1 and zc.classes == {0}


def test_zero_classes():
    zc = zero_classes_mod(Y, 11)
    assert zc == (11, frozenset({5}))
    assert 5 % zero_classes_mod(Y, 373).period in zero_classes_mod(Y, 373).classes
    assert 0 in zero_classes_mod(BinaryRecurrence(2, 1, 1, 0), 5).classes


def brute_propagation(seq, q, cls, mod, hi):
    return all(t % q == 0 for r, t in zip(range(-1, hi + 1), terms(seq, -1, hi)) if (r - cls) % mod == 0)


def test_divisor_propagation_examples():
    assert divisor_propagation(Y, 373, 5, 11)
    assert divisor_propagation(Y, 51193, 5, 11)
    assert not divisor_propagation(Y, 373, 0, 11)


@pytest.mark.parametrize("q", [373, 51193, 7, 13, 47])
@pytest.mark.parametrize("cls", [0, 5, 6])
def test_divisor_propagation_matches_brute_force(q, cls):
    window = math.lcm(11, cycle_mod(Y, q).period)
    assert divisor_propagation(Y, q, cls, 11) == brute_propagation(Y, q, cls, 11, 3 * window)


def test_power_terms():
    assert power_terms(Y, 11, range(-1, 31)) == [(-1, 0), (0, 0)]
    assert power_terms(Y, 11, range(5, 6)) == []
    assert (0, 1) in power_terms(BinaryRecurrence(2, 1, 1, 11), 11, range(-1, 3))
