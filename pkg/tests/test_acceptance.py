"""Acceptance criteria, one test each.  Every test prints a single PASS/FAIL line.

Criterion 3 compares against the bosonic relations exactly as printed.  That
table is not a Lie algebra, so the test fails by design.
"""

import random
import time

import pytest

from galsca import linalg as la
from galsca.builder import build_su22N
from galsca.contraction import (K_TILDE, check_coleman_mandula, check_count, check_internal, check_sorting,
                                check_vanishing, contracted_su22n, galilean_target, standard_weights)
from galsca.core import LinearCombination, bracket, compare_tables, compute_center, verify_graded_jacobi
from galsca.projection import build_omega, build_projectors, projected_su22n
from galsca.search import SearchSpec, scan_weights


@pytest.fixture
def line(capsys):
    def emit(n, title, passed, detail=""):
        with capsys.disabled():
            tail = f" [{detail}]" if detail else ""
            print(f"\nACCEPTANCE {n:>2} {'PASS' if passed else 'FAIL'}: {title}{tail}")
    return emit


def test_criterion_01_jacobi_n2(line):
    t0 = time.perf_counter()
    alg = build_su22N(2)
    viol = verify_graded_jacobi(alg)
    dt = time.perf_counter() - t0
    ok = len(alg.basis) == 35 and not viol and dt < 60
    line(1, "su(2,2|2) graded Jacobi closure", ok, f"{len(viol)} violations, {len(alg.basis)} generators, {dt:.1f}s")
    assert ok


@pytest.mark.slow
def test_criterion_02_jacobi_n4(line):
    t0 = time.perf_counter()
    alg = build_su22N(4)
    viol = verify_graded_jacobi(alg, workers=1)
    dt = time.perf_counter() - t0
    ok = alg.dims == (31, 32) and not viol and dt < 15 * 60
    line(2, "su(2,2|4) graded Jacobi closure", ok, f"{len(viol)} violations, {len(alg.basis)} generators, {dt:.1f}s")
    assert ok


def test_criterion_03_bosonic_contraction_literal(line):
    alg, _ = contracted_su22n(2)
    target = galilean_target("printed")
    sub = alg.restrict([g for g in alg.basis if g in set(target.basis)])
    diffs = compare_tables(sub, target)
    shown = "; ".join(f"[{d.left},{d.right}] got {d.a_value} want {d.b_value}" for d in diffs[:3])
    line(3, "contracted bosonic sector equals the printed Galilean conformal relations", not diffs,
         f"{len(diffs)} diffs: {shown}" if diffs else "0 diffs")
    assert diffs == []


@pytest.mark.parametrize("N", [2, 4])
def test_criterion_04_fermionic_vanishing(line, N):
    alg, _ = contracted_su22n(N)
    item = check_vanishing(alg)
    line(4, f"vanishing {{Q-,Q-}}, {{S-,S-}}, {{Q-,S-}} at N={N}", item.passed, f"{len(item.details)} diffs")
    assert item.passed


@pytest.mark.parametrize("N", [2, 4])
def test_criterion_05_sector_sorting(line, N):
    alg, _ = contracted_su22n(N)
    item = check_sorting(alg)
    line(5, f"internal generators sorted into H~ / K~ at N={N}", item.passed, f"{len(item.details)} misplacements")
    assert item.passed


@pytest.mark.parametrize("N, dims", [(2, (3, 1)), (4, (10, 6))])
def test_criterion_06_internal_structure(line, N, dims):
    alg, _ = contracted_su22n(N)
    item = check_internal(alg, N, projected_su22n(N)[1])
    hs = sum(g.kind in ("TtS-", "TtA+") for g in alg.basis)
    ks = sum(g.kind in K_TILDE for g in alg.basis)
    ok = item.passed and (hs, ks) == dims
    line(6, f"K~ abelian ideal, H~ symplectic, dims at N={N}", ok, f"dim H~={hs}, dim K~={ks}")
    assert ok


@pytest.mark.parametrize("N", [2, 4])
def test_criterion_07_spacetime_internal_commute(line, N):
    alg, _ = contracted_su22n(N)
    item = check_coleman_mandula(alg)
    line(7, f"spacetime and internal sectors commute at N={N}", item.passed, f"{len(item.details)} exceptions")
    assert item.passed


@pytest.mark.parametrize("N", [2, 4])
def test_criterion_08_generator_count(line, N):
    alg, _ = contracted_su22n(N)
    item = check_count(alg, N)
    ok = item.passed and len(alg.basis) == len(build_su22N(N).basis)
    line(8, f"generator count conserved at N={N}", ok, f"{len(alg.basis)} = 15+N^2+8N")
    assert ok


@pytest.mark.parametrize("N", [2, 4])
def test_criterion_09_projectors(line, N):
    proj = build_projectors(build_omega(N // 2))
    checks = proj.checks()
    ok = all(checks.values()) and la.rank(proj.p_plus) == la.rank(proj.p_minus) == 2 * N
    line(9, f"projector identities, symmetry and rank 2N at N={N}", ok,
         ", ".join(k for k, v in checks.items() if not v) or "all hold")
    assert ok


def test_criterion_10_center_report(line):
    alg, _ = contracted_su22n(2)
    t0 = time.perf_counter()
    center = compute_center(alg)
    dt = time.perf_counter() - t0
    annihilate = all(bracket(alg, v, g) == LinearCombination() for v in center for g in alg.basis)
    k_count = sum(g.kind in K_TILDE for g in alg.basis)
    note = f"center dim {len(center)} vs K~ count {k_count}"
    if len(center) != k_count:
        note += " (discrepancy surfaced)"
    ok = annihilate and dt < 10
    line(10, "center basis annihilates every generator", ok, f"{note}, {dt:.2f}s")
    assert ok


@pytest.mark.slow
def test_criterion_11_weight_search(line):
    t0 = time.perf_counter()
    r1 = scan_weights(SearchSpec.make(1))
    r2 = scan_weights(SearchSpec.make(2))
    dt = time.perf_counter() - t0
    std = standard_weights(2).as_dict()
    ok = r1.admissible == [] and std in r2.weights() and dt < 600
    line(11, "N=1 scan is empty, N=2 scan contains the standard weights", ok,
         f"N=1: 0 of {r1.naive_size}; N=2: {len(r2.admissible)} of {r2.naive_size}; {dt:.1f}s")
    assert ok


def test_criterion_12_seeded_sign_flips(line):
    alg = build_su22N(2)
    terms = [(key, g) for key, v in alg.table.items() for g, _ in v.items()]
    sample = random.Random(20261016).sample(terms, 100)
    caught = 0
    for (x, y), g in sample:
        v = alg.table[(x, y)]
        flipped = LinearCombination((h, -c if h == g else c) for h, c in v.items())
        if verify_graded_jacobi(alg.with_entry(x, y, flipped)):
            caught += 1
    line(12, "single sign flips break Jacobi", caught == 100, f"{caught}/100 detected")
    assert caught == 100
