from fractions import Fraction

import pytest

from galsca.contraction import (DivergentBracket, WeightAssignment, analyse, check_bosonic, contract,
                                contract_with_report, contracted_su22n, family_of, galilean_target, rename,
                                rescale, standard_weights, verify_target, zero_weights)
from galsca.core import (Gen, LinearCombination, SuperAlgebra, TableBuilder, check_substructure,
                         compare_tables, compute_center, count_jacobi_violations, verify_graded_jacobi)
from galsca.projection import projected_su22n
from galsca.scalars import LaurentPoly

LC = LinearCombination


def toy():
    h, b, p = Gen("H"), Gen("B", (1,)), Gen("P", (1,))
    tb = TableBuilder([p, h, b])
    tb.add(h, b, p, 3)
    return tb.build()


def test_rename():
    assert rename(Gen("P", (0,))) == (Gen("H"), 1)
    assert rename(Gen("M", (0, 2))) == (Gen("B", (2,)), -1)
    assert rename(Gen("K_conf", (0,))) == (Gen("Kexp"), 1)
    assert rename(Gen("K_conf", (3,))) == (Gen("F", (3,)), 1)
    assert rename(Gen("Q+", (1, 2))) == (Gen("Qt+", (1, 2)), 1)
    assert rename(Gen("M", (1, 2))) == (Gen("M", (1, 2)), 1)
    assert rename(Gen("Q", (1, 2))) == (Gen("Q", (1, 2)), 1)


def test_families():
    assert family_of(Gen("TtS-", (1, 1))) == family_of(Gen("TtA+", (1, 2))) == "h"
    assert family_of(Gen("TtS+", (1, 2))) == "k"
    assert family_of(Gen("T_S", (1, 2))) == "T"
    assert family_of(Gen("St-", (1, 1))) == "St-"


def test_weights_validation():
    with pytest.raises(ValueError):
        WeightAssignment.of({"H": Fraction(1, 3)})
    w = WeightAssignment.of({"H": 1})
    assert w.replace(Qt_plus=Fraction(1, 2)).as_dict()["Qt+"] == Fraction(1, 2)
    with pytest.raises(ValueError):
        standard_weights(3)


@pytest.mark.parametrize("wh, wb, wp, exp", [(1, -1, 0, 0), (1, 0, 0, 2), (0, -1, 0, -2), (Fraction(1, 2), 0, 1, -1)])
def test_exponent_bookkeeping(wh, wb, wp, exp):
    w = WeightAssignment.of({"H": wh, "B": wb, "P": wp})
    r = rescale(toy(), w, do_rename=False)
    v = r.entry(Gen("H"), Gen("B", (1,)))
    assert v == LC.of(Gen("P", (1,)), LaurentPoly.monomial(3, exp))


def test_exponents_match_formula_n2():
    alg = projected_su22n(2)[0]
    w = standard_weights(2)
    rep = analyse(rescale(alg, w))
    assert rep.terms
    for t in rep.terms:
        assert t.exponent == 2 * (w.weight(t.left) + w.weight(t.right) - w.weight(t.target))


def test_contract_limits():
    w = WeightAssignment.of({"H": 1, "B": 0, "P": 1})
    out = contract(rescale(toy(), w, do_rename=False))
    assert out.entry(Gen("H"), Gen("B", (1,))) == LC.of(Gen("P", (1,)), 3)
    w = WeightAssignment.of({"H": 1, "B": 0, "P": 2})
    assert contract(rescale(toy(), w, do_rename=False)).table == {}
    with pytest.raises(DivergentBracket) as ei:
        contract(rescale(toy(), WeightAssignment.of({"H": 1, "B": 0, "P": 0}), do_rename=False))
    assert ei.value.pairs == [(Gen("H"), Gen("B", (1,)), 2)]
    with pytest.raises(ValueError):
        contract(toy())


def test_rescale_rejects_missing_family():
    with pytest.raises(KeyError):
        rescale(toy(), WeightAssignment.of({"H": 0}), do_rename=False)


def test_standard_contraction_n2():
    alg, rep = contracted_su22n(2)
    assert rep.well_defined and rep.jacobi_violations == 0
    assert verify_graded_jacobi(alg) == []
    assert len(alg.basis) == 15 + 4 + 16
    assert all(item.passed for item in verify_target(alg, 2))


def test_zero_weights_are_identity():
    alg, _ = contracted_su22n(2)
    fams = {family_of(g) for g in alg.basis}
    again, rep = contract_with_report(alg, zero_weights(fams))
    assert rep.well_defined and again == alg


@pytest.mark.parametrize("wf, degree", [(0, 4), (-1, 2)])
def test_divergent_weights(wf, degree):
    alg = projected_su22n(2)[0]
    out, rep = contract_with_report(alg, standard_weights(2).replace(F=wf))
    assert out is None and not rep.well_defined
    pairs = {(x.kind, y.kind) for x, y, _ in rep.diverging}
    assert pairs == {("H", "F"), ("F", "Qt+")}
    assert {d for _, _, d in rep.diverging} == {degree}
    assert len(rep.diverging) == 3 + 12


def test_target_jacobi():
    assert count_jacobi_violations(galilean_target("printed")) == 24
    assert count_jacobi_violations(galilean_target("repaired")) == 0
    with pytest.raises(ValueError):
        galilean_target("other")


def test_contraction_vs_printed_target():
    alg, _ = contracted_su22n(2)
    gens = [g for g in alg.basis if g in set(galilean_target().basis)]
    sub = alg.restrict(gens)
    assert len(compare_tables(sub, galilean_target("printed"))) == 7
    assert compare_tables(sub, galilean_target("repaired")) == []


def test_literal_checklist():
    alg, _ = contracted_su22n(2)
    failed = [i.key for i in verify_target(alg, 2, literal=True) if not i.passed]
    assert failed == ["a", "d"]


def test_seeded_fault_in_bosonic_sector():
    alg, _ = contracted_su22n(2)
    bad = alg
    K = Gen("Kexp")
    for i in (1, 2, 3):
        bad = bad.with_entry(K, Gen("B", (i,)), LC())
    item = check_bosonic(bad)
    assert not item.passed and len(item.details) == 3


def test_one_entry_target_diff():
    t = galilean_target("repaired")
    H, F1, B1 = Gen("H"), Gen("F", (1,)), Gen("B", (1,))
    other = t.with_entry(H, F1, LC.of(B1))
    diffs = compare_tables(t, other)
    assert [(d.left, d.right) for d in diffs] == [(H, F1)]


def test_subalgebras():
    alg, _ = contracted_su22n(2)
    galilei = [g for g in alg.basis if g.kind in ("H", "P", "B", "M")]
    assert check_substructure(alg, galilei).is_subalgebra
    r = check_substructure(alg, [g for g in alg.basis if g.kind in ("P", "B", "F")])
    assert r.is_subalgebra and r.is_abelian and not r.is_ideal


def test_center_n2():
    alg, _ = contracted_su22n(2)
    assert compute_center(alg) == []


@pytest.mark.slow
def test_center_n4():
    alg, rep = contracted_su22n(4)
    assert rep.jacobi_violations == 0
    assert compute_center(alg) == [LC.of(Gen("At"))]
    assert all(item.passed for item in verify_target(alg, 4))


def test_verify_rejects_laurent():
    with pytest.raises(ValueError):
        verify_target(rescale(toy(), WeightAssignment.of({"H": 0, "B": 0, "P": 0}), do_rename=False), 2)


def test_empty_algebra_contracts():
    empty = SuperAlgebra([], {})
    out, rep = contract_with_report(empty, WeightAssignment.of({}))
    assert out == SuperAlgebra([], {}, name=out.name) and rep.well_defined
