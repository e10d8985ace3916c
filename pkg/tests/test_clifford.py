from fractions import Fraction

from galsca import linalg as la
from galsca.clifford import (CANONICAL_FACTORS, DEFAULT_SIGMA_NORM, build_majorana_rep, search_majorana_reps,
                             sigma, spinor_symmetry_report)
from galsca.scalars import GaussianRational


def test_squares():
    g = build_majorana_rep()
    one = la.eye(4)
    assert la.equal(la.matmul(g.gamma[0], g.gamma[0]), -one)
    assert la.equal(la.matmul(g.gamma[1], g.gamma[1]), one)
    assert la.equal(la.matmul(g.gamma5, g.gamma5), -one)


def test_invariants_hold():
    assert all(build_majorana_rep().invariants().values())


def test_gamma5_anticommutes():
    g = build_majorana_rep()
    for m in g.gamma:
        assert la.is_zero(la.anticommutator(g.gamma5, m))


def test_sigma():
    g = build_majorana_rep()
    assert la.is_zero(sigma(1, 1))
    s01 = sigma(0, 1)
    assert la.equal(s01, GaussianRational(2 * DEFAULT_SIGMA_NORM) * la.matmul(g.gamma[0], g.gamma[1]))
    assert la.equal(sigma(1, 0), -s01)
    assert la.equal(sigma(2, 3, Fraction(1, 4)) * GaussianRational(2), sigma(2, 3))


def test_symmetry_report():
    rep = spinor_symmetry_report(build_majorana_rep())
    assert all(rep[f"gamma_{m}C_symmetric"] for m in range(4))
    assert all(v for k, v in rep.items() if k.startswith("sigma_"))
    # gamma5 C comes out antisymmetric in a real representation with C = gamma_0
    assert rep["gamma5C_antisymmetric"] and not rep["gamma5C_symmetric"]


def test_canonical_choice_is_first_search_result():
    first = next(search_majorana_reps())
    assert first == CANONICAL_FACTORS


def test_search_count():
    assert sum(1 for _ in search_majorana_reps()) == 1152


def test_deterministic():
    a, b = build_majorana_rep(), build_majorana_rep()
    assert all(la.equal(x, y) for x, y in zip(a.gamma, b.gamma))
