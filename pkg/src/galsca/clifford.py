"""Real 4x4 Majorana gamma matrices for the metric diag(-1, 1, 1, 1).

Conventions pinned here:

* gamma_i symmetric, C = gamma_0 antisymmetric, gamma_5 = g0 g1 g2 g3.
* epsilon = -i sigma_2 = ((0, -1), (1, 0)).

The representation is the lexicographically first solution of
:func:`search_majorana_reps`; the constants below are checked against a
fresh run of that search in the test-suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Tuple

import numpy as np

from . import linalg as la
from .scalars import GaussianRational

ETA = (-1, 1, 1, 1)

# real 2x2 basis {1, sigma_1, epsilon, sigma_3}, in search order
TWO_BY_TWO: Dict[str, Tuple[Tuple[int, int], Tuple[int, int]]] = {
    "1": ((1, 0), (0, 1)),
    "s1": ((0, 1), (1, 0)),
    "eps": ((0, -1), (1, 0)),
    "s3": ((1, 0), (0, -1)),
}

# (sign, left factor, right factor) for gamma_0..gamma_3
CANONICAL_FACTORS: Tuple[Tuple[int, str, str], ...] = (
    (1, "1", "eps"),
    (1, "1", "s1"),
    (1, "s1", "s3"),
    (1, "s3", "s3"),
)

DEFAULT_SIGMA_NORM = Fraction(1, 2)


def _two(name: str) -> np.ndarray:
    return la.as_exact(TWO_BY_TWO[name])


def signed_product(sign: int, left: str, right: str) -> np.ndarray:
    return sign * la.kron(_two(left), _two(right))


def eta(mu: int, nu: int) -> int:
    return ETA[mu] if mu == nu else 0


def _candidates() -> List[Tuple[Tuple[int, str, str], np.ndarray]]:
    out = []
    for left, right in itertools.product(TWO_BY_TWO, TWO_BY_TWO):
        for sign in (1, -1):
            out.append(((sign, left, right), signed_product(sign, left, right)))
    return out


def _symmetric(m: np.ndarray) -> bool:
    return la.equal(m, m.T)


def _antisymmetric(m: np.ndarray) -> bool:
    return la.equal(m, -m.T)


def search_majorana_reps() -> Iterator[Tuple[Tuple[int, str, str], ...]]:
    """Yield all signed-tensor-product solutions in lexicographic order.

    A solution obeys the Clifford relations for ETA, gamma_i = gamma_i^T,
    gamma_0 = -gamma_0^T and gamma_5 = -gamma_5^T.
    """
    cands = _candidates()
    ident = la.eye(4)
    # per-slot admissible candidates (square and symmetry conditions)
    slots = []
    for mu in range(4):
        ok = []
        for key, m in cands:
            if not la.equal(la.matmul(m, m), ETA[mu] * ident):
                continue
            if mu == 0 and not _antisymmetric(m):
                continue
            if mu > 0 and not _symmetric(m):
                continue
            ok.append((key, m))
        slots.append(ok)

    def extend(chosen):
        mu = len(chosen)
        if mu == 4:
            g5 = la.matmul(*[m for _, m in chosen])
            if _antisymmetric(g5):
                yield tuple(k for k, _ in chosen)
            return
        for key, m in slots[mu]:
            if all(la.is_zero(la.anticommutator(m, prev)) for _, prev in chosen):
                yield from extend(chosen + [(key, m)])

    yield from extend([])


@dataclass(frozen=True)
class GammaSet:
    gamma: Tuple[np.ndarray, ...]
    C: np.ndarray
    gamma5: np.ndarray
    eta: Tuple[int, ...]
    sigma_norm: Fraction

    def sigma(self, mu: int, nu: int) -> np.ndarray:
        return sigma(mu, nu, self.sigma_norm, self)

    def gamma_upper(self, mu: int) -> np.ndarray:
        """gamma^mu = eta^{mu mu} gamma_mu (diagonal metric)."""
        return ETA[mu] * self.gamma[mu]

    def invariants(self) -> Dict[str, bool]:
        """Named checks of every defining property; all must be True."""
        g = self.gamma
        ident = la.eye(4)
        checks = {}
        checks["clifford"] = all(
            la.equal(la.anticommutator(g[m], g[n]), 2 * eta(m, n) * ident)
            for m in range(4) for n in range(4))
        checks["gamma_i_symmetric"] = all(_symmetric(g[i]) for i in (1, 2, 3))
        checks["gamma_0_antisymmetric"] = _antisymmetric(g[0])
        checks["C_is_gamma_0"] = la.equal(self.C, g[0])
        checks["gamma5_product"] = la.equal(self.gamma5, la.matmul(*g))
        checks["gamma5_antisymmetric"] = _antisymmetric(self.gamma5)
        checks["real_entries"] = all(
            x.is_real for m in (*g, self.C, self.gamma5) for x in m.flat)
        return checks


def build_majorana_rep(sigma_norm=DEFAULT_SIGMA_NORM) -> GammaSet:
    gam = tuple(signed_product(*f) for f in CANONICAL_FACTORS)
    return GammaSet(gamma=gam, C=gam[0], gamma5=la.matmul(*gam), eta=ETA,
                    sigma_norm=Fraction(sigma_norm))


def sigma(mu: int, nu: int, s=DEFAULT_SIGMA_NORM, gammas: GammaSet | None = None) -> np.ndarray:
    """sigma_{mu nu} = s [gamma_mu, gamma_nu] (lower indices)."""
    if not (0 <= mu < 4 and 0 <= nu < 4):
        raise ValueError("spacetime indices run over 0..3")
    g = (gammas or build_majorana_rep()).gamma
    return GaussianRational(s) * la.commutator(g[mu], g[nu])


def spinor_symmetry_report(gs: GammaSet) -> Dict[str, bool]:
    """Symmetry of the bilinears that appear in {Q, Q} and {Q, S}.

    Keys ending in ``_symmetric`` / ``_antisymmetric`` state the property
    being tested; the values say whether it holds.
    """
    C = gs.C
    rep = {}
    for mu in range(4):
        m = la.matmul(gs.gamma[mu], C)
        rep[f"gamma_{mu}C_symmetric"] = _symmetric(m)
    g5c = la.matmul(gs.gamma5, C)
    rep["gamma5C_symmetric"] = _symmetric(g5c)
    rep["gamma5C_antisymmetric"] = _antisymmetric(g5c)
    rep["C_antisymmetric"] = _antisymmetric(C)
    for mu in range(4):
        for nu in range(mu + 1, 4):
            m = la.matmul(gs.sigma(mu, nu), C)
            rep[f"sigma_{mu}{nu}C_symmetric"] = _symmetric(m)
    return rep
