import pytest

from dioph11 import solver
from dioph11.ntheory import DomainError
from dioph11.solver import Certificate, LebesgueCase, SolutionTuple as T


def test_verify_examples():
    assert solver.verify_solution(T(2, 5, 1, 3))
    assert 2662 ** 2 + 11 ** 8 == 221445125 == 605 ** 3
    assert solver.verify_solution(T(2662, 605, 4, 3))
    assert not solver.verify_solution(T(3, 5, 1, 3))
    assert not solver.verify_solution(T(2, 5, 1, 10 ** 6))
    for bad in (T(0, 5, 1, 3), T(2, 0, 1, 3), T(2, 5, 0, 3), T(2, 5, 1, 2)):
        with pytest.raises(DomainError):
            solver.verify_solution(bad)


def test_confirmed_checks_equation():
    with pytest.raises(ValueError):
        T.confirmed(3, 5, 1, 3)


def test_lift_examples():
    assert solver.lift_primitive(0) == T(2, 5, 1, 3)
    assert solver.lift_primitive(1) == T(2662, 605, 4, 3)
    assert (2 * 11 ** 6, 5 * 11 ** 4) == (3543122, 73205)
    assert solver.lift_primitive(2) == T(3543122, 73205, 7, 3)
    with pytest.raises(DomainError):
        solver.lift_primitive(-1)


def test_reduce_examples():
    assert solver.reduce_to_primitive(T(2, 5, 1, 3)) == (T(2, 5, 1, 3), 0, 0)
    assert solver.reduce_to_primitive(T(2662, 605, 4, 3)) == (T(2, 5, 1, 3), 3, 2)
    assert solver.reduce_to_primitive(T(2 * 11 ** 6, 5 * 11 ** 4, 7, 3)) == (T(2, 5, 1, 3), 6, 4)


@pytest.mark.parametrize("lam", range(6))
def test_reduce_lift_round_trip(lam):
    assert solver.reduce_to_primitive(solver.lift_primitive(lam)) == (T(2, 5, 1, 3), 3 * lam, 2 * lam)


def test_reduce_rejects_non_solutions():
    with pytest.raises(DomainError):
        solver.reduce_to_primitive(T(3, 5, 1, 3))


def test_lebesgue_case_detection(monkeypatch):
    # no real tuple lands in either branch, so stub out the equation check
    monkeypatch.setattr(solver, "verify_solution", lambda t: True)
    with pytest.raises(LebesgueCase):
        solver.reduce_to_primitive(T(11 ** 3 * 7, 11 * 2, 3, 6))
    with pytest.raises(DomainError):
        solver.reduce_to_primitive(T(11 * 7, 11 * 2, 3, 3))


def test_solve_n3():
    sols, cert = solver.solve_n3()
    assert sols == {T(2, 5, 1, 3)}
    assert cert.case == "n=3"
    assert len(cert.branches) == 4
    pell_w = cert.branches[1].witness["k_odd"]
    assert pell_w["m_values"] == [0]
    assert pell_w["y_5"] == 210044879
    assert pell_w["y_5_factors"] == [[11, 1], [373, 1], [51193, 1]]
    assert pell_w["propagation"] == {"373": True, "51193": True}
    assert cert.branches[0].verdict == "rejected"
    assert "3u^2=1-11^k: RHS<0" in cert.branches[0].premise
    assert cert.branches[2].verdict == "rejected"
    assert cert.branches[3].verdict == "excluded"


def test_solve_n4():
    sols, cert = solver.solve_n4()
    assert sols == set()
    assert "x even, y odd" in cert.branches[0].premise
    xs = [v for _, v, _ in cert.branches[1].witness["direct_checks"]]
    assert xs[:5] == [1, 1, 3, 7, 17]
    assert "D=2" in cert.branches[1].method


@pytest.mark.parametrize("n", [5, 7, 11, 13, 31, 997])
def test_solve_prime(n):
    sols, cert = solver.solve_prime_ge5(n)
    assert sols == set()
    assert cert.branches[-1].verdict == "excluded"
    assert cert.branches[-1].witness["reason"] == "congruence_contradiction"


@pytest.mark.parametrize("n", [4, 6, 9, 1])
def test_solve_prime_rejects(n):
    with pytest.raises(DomainError):
        solver.solve_prime_ge5(n)


@pytest.mark.parametrize("n,route", [(3, 3), (4, 4), (5, 5), (6, 3), (8, 4), (9, 3), (10, 5), (12, 4),
                                     (15, 5), (18, 3), (21, 7), (49, 7), (27, 3), (36, 4)])
def test_route_exponent(n, route):
    assert solver.route_exponent(n) == route


def test_solve_exponent_composites():
    for n in (6, 9, 12, 15, 27):
        sols, cert = solver.solve_exponent(n)
        assert sols == set()
        assert cert.branches[0].method.startswith("descent")


def test_solve_all():
    fam, certs = solver.solve_all(0)
    assert fam == [T(2, 5, 1, 3)]
    fam, certs = solver.solve_all(2)
    assert len(fam) == 3 and all(solver.verify_solution(t) for t in fam)
    assert {c.case for c in certs} >= {"n=3", "n=4", "n=5", "n=7", "reduction"}
    for t in fam:
        assert t.x % 2 == 0 and t.y % 2 == 1


def test_certificate_json_round_trip():
    _, certs = solver.solve_all(2, exponents=(3, 4, 5, 7, 6))
    for c in certs:
        d = c.to_dict()
        assert set(d) == {"equation", "case", "branches", "solutions"}
        for b in d["branches"]:
            assert set(b) == {"premise", "method", "verdict", "witness"}
        for s in d["solutions"]:
            assert set(s) == {"x", "y", "k", "n", "lambda"}
        assert Certificate.from_json(c.to_json()) == c


def test_certificate_text():
    _, cert = solver.solve_n3()
    text = cert.to_text()
    assert text.startswith("equation: x^2 + 11^(2k) = y^n\ncase: n=3")
    assert "solution[0]: x=2 y=5 k=1 n=3 lambda=0" in text
