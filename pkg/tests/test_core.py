import random

import pytest
from hypothesis import given, settings, strategies as st

from galsca.core import (BasisMismatch, Gen, LinearCombination, SuperAlgebra, TableBuilder,
                         UnknownGenerator, bracket, change_basis, check_substructure, compare_tables,
                         compute_center, count_jacobi_violations, verify_graded_jacobi,
                         verify_graded_jacobi_reference)
from galsca.scalars import GaussianRational, I

LC = LinearCombination


def so3():
    m12, m13, m23 = Gen("M", (1, 2)), Gen("M", (1, 3)), Gen("M", (2, 3))
    tb = TableBuilder([m12, m13, m23])
    tb.add(m12, m13, m23, -1)
    tb.add(m12, m23, m13, 1)
    tb.add(m13, m23, m12, -1)
    return tb.build(name="so(3)")


def heisenberg():
    h, b, p = Gen("H"), Gen("B", (1,)), Gen("P", (1,))
    tb = TableBuilder([p, h, b])
    tb.add(h, b, p, 1)
    return tb.build(name="heisenberg")


def osp12():
    h, e, f = Gen("D"), Gen("H"), Gen("Kexp")
    qp, qm = Gen("Q", (1, 1)), Gen("Q", (1, 2))
    tb = TableBuilder([h, e, f, qp, qm])
    tb.add(h, e, e, 2)
    tb.add(h, f, f, -2)
    tb.add(e, f, h, 1)
    tb.add(h, qp, qp, 1)
    tb.add(h, qm, qm, -1)
    tb.add(e, qm, qp, -1)
    tb.add(f, qp, qm, -1)
    tb.add(qp, qp, e, 2)
    tb.add(qm, qm, f, -2)
    tb.add(qp, qm, h, 1)
    return tb.build(name="osp(1|2)")


def test_gen_validation():
    with pytest.raises(ValueError):
        Gen("P", (4,))
    with pytest.raises(ValueError):
        Gen("M", (2, 1))
    with pytest.raises(ValueError):
        Gen("Q", (1, 5))
    with pytest.raises(ValueError):
        Gen("nonsense")
    assert Gen.parse("Qt+[1,2]") == Gen("Qt+", (1, 2))
    assert Gen("Q", (1, 1)).odd and not Gen("T_S", (1, 2)).odd


def test_linear_combination_drops_zeros():
    g = Gen("D")
    v = LC.of(g) - LC.of(g)
    assert not v and len(v) == 0
    w = LC([(Gen("H"), 2), (Gen("D"), 1)])
    assert [x for x, _ in w.items()] == [Gen("D"), Gen("H")]


def test_known_algebras_pass():
    for alg in (so3(), heisenberg(), osp12()):
        assert verify_graded_jacobi(alg) == []
        assert verify_graded_jacobi_reference(alg) == []


def test_abelian_table_passes():
    basis = [Gen("P", (i,)) for i in range(4)]
    assert verify_graded_jacobi(SuperAlgebra(basis, {})) == []


def test_odd_self_bracket_is_stored():
    a = osp12()
    q = Gen("Q", (1, 1))
    assert bracket(a, q, q) == LC.of(Gen("H"), 2)


def test_graded_antisymmetry():
    a = osp12()
    for x in a.basis:
        for y in a.basis:
            s = -1 if (x.odd and y.odd) else 1
            assert bracket(a, x, y) + bracket(a, y, x) * s == LC()


def test_unknown_generator():
    with pytest.raises(UnknownGenerator):
        bracket(so3(), Gen("D"), Gen("M", (1, 2)))


def test_bilinearity():
    a = osp12()
    rnd = random.Random(3)
    for _ in range(30):
        x, y, z = (rnd.choice(a.basis) for _ in range(3))
        al, be = GaussianRational(rnd.randint(-3, 3), 1), GaussianRational(2, rnd.randint(-2, 2))
        left = bracket(a, LC([(x, al)]) + LC([(y, be)]), z)
        assert left == bracket(a, x, z) * al + bracket(a, y, z) * be


def test_sign_flip_detected():
    a = osp12()
    for key, v in a.table.items():
        bad = a.with_entry(key[0], key[1], -v)
        assert verify_graded_jacobi(bad), key


def test_fast_and_reference_agree_on_faults():
    a = osp12()
    for key in a.table:
        bad = a.with_entry(key[0], key[1], a.table[key] * 2)
        fast = {v.triple: v.residual for v in verify_graded_jacobi(bad)}
        ref = {v.triple: v.residual for v in verify_graded_jacobi_reference(bad)}
        assert fast == ref
        assert count_jacobi_violations(bad) == len(fast)


def test_complex_coefficients():
    # su(2) with complex structure constants: [T_i, T_j] = i eps_ijk T_k
    t1, t2, t3 = Gen("M", (1, 2)), Gen("M", (1, 3)), Gen("M", (2, 3))
    tb = TableBuilder([t1, t2, t3])
    tb.add(t1, t2, t3, I)
    tb.add(t2, t3, t1, I)
    tb.add(t3, t1, t2, I)
    a = tb.build()
    assert verify_graded_jacobi(a) == []
    # rescaling a single entry of a 3-dim table keeps Jacobi, adding a component does not
    assert verify_graded_jacobi(a.with_entry(t1, t2, LC.of(t3, GaussianRational(0, 2)))) == []
    bad = a.with_entry(t1, t2, LC([(t3, I), (t1, 1)]))
    assert [v.triple for v in verify_graded_jacobi(bad)] == [(t1, t2, t3)]
    assert compute_center(a) == []


def _random_table(seed: int):
    rnd = random.Random(seed)
    basis = [Gen("D"), Gen("H"), Gen("Kexp"), Gen("Q", (1, 1)), Gen("Q", (1, 2))]
    tab = {}
    for i, x in enumerate(basis):
        for y in basis[i:]:
            if x == y and not x.odd or rnd.random() < 0.5:
                continue
            par = (x.parity + y.parity) % 2
            tgt = [g for g in basis if g.parity == par]
            tab[(x, y)] = LC((g, rnd.randint(-2, 2)) for g in tgt if rnd.random() < 0.5)
    return SuperAlgebra(basis, tab)


@settings(max_examples=40)
@given(st.integers(0, 10 ** 6))
def test_fast_matches_reference_random(seed):
    a = _random_table(seed)
    fast = [(v.triple, v.residual) for v in verify_graded_jacobi(a)]
    ref = sorted(((v.triple, v.residual) for v in verify_graded_jacobi_reference(a)),
                 key=lambda t: tuple(g.sort_key for g in t[0]))
    assert fast == ref


@settings(max_examples=20)
@given(st.integers(0, 10 ** 6), st.randoms())
def test_violations_stable_under_reordering(seed, rnd):
    a = _random_table(seed)
    order = list(a.basis)
    rnd.shuffle(order)
    b = a.reordered(order)
    assert {v.triple for v in verify_graded_jacobi(a)} == {v.triple for v in verify_graded_jacobi(b)}
    assert verify_graded_jacobi(a) == verify_graded_jacobi(a)


def test_workers_do_not_change_result():
    a = _random_table(11)
    assert verify_graded_jacobi(a, workers=1) == verify_graded_jacobi(a, workers=3)


def test_center():
    h = heisenberg()
    assert compute_center(h) == [LC.of(Gen("P", (1,)))]
    assert compute_center(so3()) == []
    basis = [Gen("P", (i,)) for i in range(3)]
    assert len(compute_center(SuperAlgebra(basis, {}))) == 3


def test_center_vectors_annihilate():
    for alg in (heisenberg(), osp12(), so3()):
        for v in compute_center(alg):
            for g in alg.basis:
                assert bracket(alg, v, g) == LC()


def test_substructure():
    a = osp12()
    even = [g for g in a.basis if not g.odd]
    r = check_substructure(a, even)
    assert r.is_subalgebra and not r.is_ideal and not r.is_abelian
    h = heisenberg()
    r = check_substructure(h, [Gen("P", (1,))])
    assert r.is_subalgebra and r.is_ideal and r.is_abelian
    r = check_substructure(h, [Gen("H"), Gen("B", (1,))])
    assert not r.is_subalgebra and r.escapes == ((Gen("H"), Gen("B", (1,))),)


def test_compare_tables():
    a = so3()
    assert compare_tables(a, a) == []
    m12, m13, m23 = a.basis
    b = a.with_entry(m12, m13, LC.of(m23, -2))
    diffs = compare_tables(a, b)
    assert len(diffs) == 1 and (diffs[0].left, diffs[0].right) == (m12, m13)
    with pytest.raises(BasisMismatch):
        compare_tables(a, heisenberg())
    with pytest.raises(BasisMismatch):
        compare_tables(a, a, {m12: m12, m13: m12, m23: m23})


def test_compare_rejects_parity_change():
    a = SuperAlgebra([Gen("D")], {})
    b = SuperAlgebra([Gen("Q", (1, 1))], {})
    with pytest.raises(BasisMismatch):
        compare_tables(a, b, {Gen("D"): Gen("Q", (1, 1))})


def test_change_basis_roundtrip():
    a = osp12()
    h, e, f = Gen("D"), Gen("H"), Gen("Kexp")
    # e' = e + f, keep the rest
    new_in_old = {Gen("B", (1,)): LC([(e, 1), (f, 1)])}
    old_in_new = {e: LC([(Gen("B", (1,)), 1), (f, -1)])}
    basis = [h, Gen("B", (1,)), f, Gen("Q", (1, 1)), Gen("Q", (1, 2))]
    b = change_basis(a, basis, new_in_old, old_in_new)
    assert verify_graded_jacobi(b) == []
    back = change_basis(b, list(a.basis), {e: old_in_new[e]}, {Gen("B", (1,)): new_in_old[Gen("B", (1,))]})
    assert back == a


def test_table_must_be_canonical():
    m12, m13 = Gen("M", (1, 2)), Gen("M", (1, 3))
    with pytest.raises(ValueError):
        SuperAlgebra([m12, m13], {(m13, m12): LC.of(m12)})
    with pytest.raises(ValueError):
        SuperAlgebra([m12], {(m12, m12): LC.of(m12)})
    with pytest.raises(ValueError):
        SuperAlgebra([m12, Gen("Q", (1, 1))], {(m12, m12): LC(), (m12, Gen("Q", (1, 1))): LC.of(m12)})
