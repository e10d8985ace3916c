"""Symplectic form, supercharge projectors and the fourfold split of u(N).

Composite spinor-internal indices are flattened as ``(a, alpha)`` in
row-major order, internal index first, matching the Q/S generator indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import linalg as la
from .builder import build_internal_basis
from .clifford import TWO_BY_TWO, build_majorana_rep
from .core import Gen, LinearCombination, SuperAlgebra, change_basis
from .scalars import I, GaussianRational


class RankDefect(ValueError):
    pass


class SplitInconsistent(ValueError):
    pass


EPSILON = la.as_exact(TWO_BY_TWO["eps"])


@dataclass(frozen=True)
class SymplecticForm:
    omega: np.ndarray

    @property
    def N(self) -> int:
        return self.omega.shape[0]

    def checks(self) -> Dict[str, bool]:
        o = self.omega
        return {
            "antisymmetric": la.equal(o.T, -o),
            "squares_to_minus_one": la.equal(la.matmul(o, o), -la.eye(self.N)),
        }


def build_omega(k: int) -> SymplecticForm:
    """Block-diagonal 1_k (x) epsilon with epsilon = -i sigma_2."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return SymplecticForm(la.kron(la.eye(k), EPSILON))


@dataclass(frozen=True)
class Projector:
    p_plus: np.ndarray
    p_minus: np.ndarray
    N: int

    def get(self, sign: str) -> np.ndarray:
        return self.p_plus if sign == "+" else self.p_minus

    def checks(self) -> Dict[str, bool]:
        p, m = self.p_plus, self.p_minus
        n = p.shape[0]
        zero = la.zeros(n)
        return {
            "plus_idempotent": la.equal(la.matmul(p, p), p),
            "minus_idempotent": la.equal(la.matmul(m, m), m),
            "plus_minus_zero": la.equal(la.matmul(p, m), zero),
            "minus_plus_zero": la.equal(la.matmul(m, p), zero),
            "complete": la.equal(p + m, la.eye(n)),
            "plus_symmetric": la.equal(p.T, p),
            "minus_symmetric": la.equal(m.T, m),
            "rank_plus": la.rank(p) == 2 * self.N,
            "rank_minus": la.rank(m) == 2 * self.N,
        }


def build_projectors(omega: SymplecticForm, C: Optional[np.ndarray] = None) -> Projector:
    if C is None:
        C = build_majorana_rep().C
    n = 4 * omega.N
    half = GaussianRational(Fraction(1, 2))
    oc = la.kron(omega.omega, C)
    return Projector(half * (la.eye(n) + oc), half * (la.eye(n) - oc), omega.N)


def _flat_index(N: int) -> List[Tuple[int, int]]:
    return [(a, al) for a in range(1, N + 1) for al in range(1, 5)]


def projected_rows(proj: Projector, sign: str) -> List[int]:
    """First maximal independent rows of P_sign, in canonical (a, alpha) order."""
    rows = la.independent_rows(list(proj.get(sign)))
    if len(rows) != 2 * proj.N:
        raise RankDefect(f"P{sign} has {len(rows)} independent rows, expected {2 * proj.N}")
    return rows


def project_basis(alg: SuperAlgebra, proj: Projector) -> SuperAlgebra:
    """Re-express Q, S through the projected combinations Q±, S±."""
    N = proj.N
    idx = _flat_index(N)
    plus = projected_rows(proj, "+")
    minus = projected_rows(proj, "-")
    W = np.array([proj.p_plus[r] for r in plus] + [proj.p_minus[r] for r in minus], dtype=object)
    if la.rank(W) != 4 * N:
        raise RankDefect("projected supercharges are not independent")
    Winv = la.inverse(W)
    new_in_old: Dict[Gen, LinearCombination] = {}
    old_in_new: Dict[Gen, LinearCombination] = {}
    new_odd: List[Gen] = []
    for base in ("Q", "S"):
        labels = ([Gen(base + "+", idx[r]) for r in plus]
                  + [Gen(base + "-", idx[r]) for r in minus])
        for lab, row in zip(labels, W):
            new_in_old[lab] = LinearCombination(
                (Gen(base, idx[c]), row[c]) for c in range(4 * N) if row[c])
        for o in range(4 * N):
            old_in_new[Gen(base, idx[o])] = LinearCombination(
                (labels[j], Winv[o, j]) for j in range(4 * N) if Winv[o, j])
        new_odd.extend(labels)
    order = {"Q+": 0, "Q-": 1, "S+": 2, "S-": 3}
    new_odd.sort(key=lambda g: (order[g.kind], g.indices))
    even = [g for g in alg.basis if not g.odd]
    return change_basis(alg, even + new_odd, new_in_old, old_in_new,
                        name=f"{alg.name} (projected)")


# -- the fourfold split --------------------------------------------------------------------

#: sector kinds, grouped
H_KINDS = ("TS-", "TA+")
K_KINDS = ("TS+", "TA-")


def sector_product(k1: str, k2: str) -> str:
    """Cell of the sector multiplication table for [k1, k2]."""
    t1, s1 = k1[1], k1[2]
    t2, s2 = k2[1], k2[2]
    typ = "A" if t1 == t2 else "S"
    sign = "+" if s1 == s2 else "-"
    return f"T{typ}{sign}"


def omega_parts(X: np.ndarray, omega: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """(X_+, X_-): the parts commuting / anticommuting with omega."""
    half = GaussianRational(Fraction(1, 2))
    oxo = la.matmul(omega, X, omega)
    return half * (X - oxo), half * (X + oxo)


@dataclass
class InternalSplit:
    h_basis: List[Gen]
    k_basis: List[Gen]
    matrices: Dict[Gen, np.ndarray]
    algebra: SuperAlgebra
    table_checks: Dict[Tuple[str, str], bool]
    symmetric_pair: Dict[str, bool]

    @property
    def dim_h(self) -> int:
        return len(self.h_basis)

    @property
    def dim_k(self) -> int:
        """Coset dimension, the axial generator included."""
        return len(self.k_basis)

    def symplectic_checks(self, omega: np.ndarray) -> Dict[str, bool]:
        """Omega X = -X^T Omega on the h side, Omega X = X^T Omega on the k side."""
        out = {}
        for g in self.h_basis:
            X = self.matrices[g]
            out[g.name] = la.equal(la.matmul(omega, X), -la.matmul(X.T, omega))
        for g in self.k_basis:
            X = self.matrices[g]
            out[g.name] = la.equal(la.matmul(omega, X), la.matmul(X.T, omega))
        return out


def _decompose(target: np.ndarray, basis: Sequence[np.ndarray]) -> List[GaussianRational]:
    mat = np.array([b.reshape(-1) for b in basis], dtype=object).T
    rows = la.independent_rows(list(mat))
    sub = mat[rows]
    coeffs = la.solve(sub, target.reshape(-1)[rows])
    recon = la.matmul(mat, coeffs.reshape(-1, 1)).reshape(-1)
    if not all(p == q for p, q in zip(recon, target.reshape(-1))):
        raise SplitInconsistent("matrix is outside the span of the basis")
    return list(coeffs)


def split_internal(alg: SuperAlgebra, omega: SymplecticForm) -> InternalSplit:
    """Replace T_S / T_A by their Omega-(anti)commuting parts and verify the sector table."""
    N = omega.N
    O = omega.omega
    ib = build_internal_basis(N)
    sym = [(Gen("T_S", k), m) for k, m in ib.tauS.items()]
    asym = [(Gen("T_A", k), m) for k, m in ib.tauA.items()]

    sectors: Dict[str, List[Tuple[Gen, np.ndarray]]] = {k: [] for k in ("TS+", "TS-", "TA+", "TA-")}
    for typ, items in (("S", sym), ("A", asym)):
        for sign in ("+", "-"):
            cands = []
            for g, m in items:
                part = omega_parts(m, O)[0 if sign == "+" else 1]
                cands.append((g, part))
            flat = [p.reshape(-1) for _, p in cands]
            if not flat:
                continue
            for r in la.independent_rows(flat):
                g, p = cands[r]
                sectors[f"T{typ}{sign}"].append((Gen(f"T{typ}{sign}", g.indices), p))

    old_sym = [m for _, m in sym]
    old_asym = [m for _, m in asym]
    new_in_old: Dict[Gen, LinearCombination] = {}
    for kind, items in sectors.items():
        olds, mats = (sym, old_sym) if kind[1] == "S" else (asym, old_asym)
        for g, p in items:
            cs = _decompose(p, mats)
            new_in_old[g] = LinearCombination((olds[i][0], c) for i, c in enumerate(cs) if c)
    if sum(len(v) for v in sectors.values()) != len(sym) + len(asym):
        raise SplitInconsistent("sector parts do not span the internal algebra")

    # invert: each old generator as a combination of sector generators
    new_gens = [g for kind in ("TS+", "TS-", "TA+", "TA-") for g, _ in sectors[kind]]
    old_gens = [g for g, _ in sym] + [g for g, _ in asym]
    if new_gens:
        M = np.array([[new_in_old[n][o] for o in old_gens] for n in new_gens], dtype=object)
        Minv = la.inverse(M)
    old_in_new = {}
    for j, o in enumerate(old_gens):
        old_in_new[o] = LinearCombination((new_gens[i], Minv[j, i]) for i in range(len(new_gens))
                                          if Minv[j, i])

    basis = []
    for g in alg.basis:
        if g.kind in ("T_S", "T_A"):
            continue
        basis.append(g)
        if g.kind == "A":
            basis.extend(new_gens)
    new_alg = change_basis(alg, basis, new_in_old, old_in_new, name=alg.name)

    # complex u(N) matrices: i tau_S, tau_A, i 1 for the axial direction
    matrices: Dict[Gen, np.ndarray] = {}
    for kind, items in sectors.items():
        for g, p in items:
            matrices[g] = I * p if kind[1] == "S" else p
    matrices[Gen("A")] = I * la.eye(N)

    h_basis = [g for g in new_gens if g.kind in H_KINDS]
    k_basis = [g for g in new_gens if g.kind in K_KINDS] + [Gen("A")]

    table: Dict[Tuple[str, str], bool] = {}
    for k1 in ("TS+", "TS-", "TA+", "TA-"):
        for k2 in ("TS+", "TS-", "TA+", "TA-"):
            want = sector_product(k1, k2)
            ok = True
            for g1, _ in sectors[k1]:
                for g2, _ in sectors[k2]:
                    v = new_alg.entry(g1, g2)
                    if any(h.kind != want for h in v.support):
                        ok = False
            table[(k1, k2)] = ok
    if not all(table.values()):
        bad = [k for k, v in table.items() if not v]
        raise SplitInconsistent(f"sector products outside their cells: {bad}")

    hs, ks = set(h_basis), set(k_basis)
    pair = {"[H,H]<H": True, "[H,K]<K": True, "[K,K]<H": True}
    for x in h_basis + k_basis:
        for y in h_basis + k_basis:
            sup = new_alg.entry(x, y).support
            if x in hs and y in hs and not sup <= hs:
                pair["[H,H]<H"] = False
            if ((x in hs) != (y in hs)) and not sup <= ks:
                pair["[H,K]<K"] = False
            if x in ks and y in ks and not sup <= hs:
                pair["[K,K]<H"] = False
    return InternalSplit(h_basis, k_basis, matrices, new_alg, table, pair)


def supercharge_count(alg: SuperAlgebra) -> int:
    """N read off the basis: 4N components of Q (or of Q+ and Q- together)."""
    n = sum(1 for g in alg.basis if g.kind in ("Q", "Q+", "Q-", "Qt+", "Qt-"))
    return n // 4


def project_and_split(alg: SuperAlgebra):
    """Project the supercharges and split u(N) of a plain su(2,2|N) table; N must be even."""
    N = supercharge_count(alg)
    if N == 0 or N % 2:
        raise ValueError(f"the symplectic form needs N = 2k, got N = {N}")
    om = build_omega(N // 2)
    proj = build_projectors(om)
    palg = project_basis(alg, proj)
    split = split_internal(palg, om)
    return split.algebra, split, proj


@lru_cache(maxsize=None)
def projected_su22n(N: int):
    """Build, project and split su(2,2|N) for even N; returns (algebra, split, projector)."""
    from .builder import build_su22N
    if N % 2:
        raise ValueError("the symplectic form needs N = 2k")
    return project_and_split(build_su22N(N))
