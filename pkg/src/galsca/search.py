"""Bounded scan over half-integer contraction weights.

Every bracket term x, y -> z of the renamed (unscaled) table picks up the
exponent ``v_x + v_y - v_z`` with ``v = 2 w``.  The success predicate is

(i)   no term has a positive exponent (the limit exists),
(ii)  the bosonic spacetime sector contracts to the Galilean conformal
      algebra (the Jacobi-consistent reading, see ``galilean_target``),
(iii) some {Q~, Q~} keeps H with a nonzero coefficient.

(ii) only involves the spacetime families, so the scan runs in two stages:
the spacetime block first, then the remaining families for each survivor.
``naive_scan`` skips the staging and is kept as an oracle.
"""

from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .contraction import (ContractionReport, WeightAssignment, contract_with_report,
                          family_of, galilean_target, rename, SPACETIME_KINDS)
from .core import Gen, SuperAlgebra

DEFAULT_CAP = 10 ** 7
DEFAULT_PINS = {"P": 0, "M": 0, "D": 0}
BOSONIC_FAMILIES = ("H", "B", "Kexp", "F")
Q_KINDS = ("Q", "Qt+", "Qt-")


class SpaceTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class SearchSpec:
    N: int
    lo: Fraction = Fraction(-2)
    hi: Fraction = Fraction(2)
    step: Fraction = Fraction(1, 2)
    pins: Tuple[Tuple[str, Fraction], ...] = tuple((k, Fraction(v)) for k, v in DEFAULT_PINS.items())
    symmetric: bool = True
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("N must be >= 1")
        for name in ("lo", "hi", "step"):
            v = Fraction(getattr(self, name))
            if (2 * v).denominator != 1:
                raise ValueError(f"{name} must be a half-integer")
            object.__setattr__(self, name, v)
        if self.step <= 0 or self.lo > self.hi:
            raise ValueError("need step > 0 and lo <= hi")
        object.__setattr__(self, "pins", tuple(sorted((k, Fraction(v)) for k, v in dict(self.pins).items())))

    @classmethod
    def make(cls, N: int, lo=-2, hi=2, step=Fraction(1, 2), pins: Optional[Mapping[str, object]] = None,
             symmetric: bool = True, cap: int = DEFAULT_CAP) -> "SearchSpec":
        p = dict(DEFAULT_PINS)
        if pins:
            p.update(pins)
        return cls(N, Fraction(lo), Fraction(hi), Fraction(step),
                   tuple((k, Fraction(v)) for k, v in p.items()), symmetric, cap)

    def grid(self) -> List[Fraction]:
        out = []
        v = self.lo
        while v <= self.hi:
            out.append(v)
            v += self.step
        return out


@dataclass
class SearchResult:
    spec: SearchSpec
    families: List[str]
    admissible: List[Tuple[WeightAssignment, ContractionReport]]
    naive_size: int
    enumerated: int
    rejected: Dict[str, int]
    elapsed: float
    stage_sizes: Dict[str, int] = field(default_factory=dict)

    @property
    def counterexamples(self) -> int:
        """Grid points failing the predicate."""
        return self.naive_size - len(self.admissible)

    def weights(self) -> List[Dict[str, Fraction]]:
        return [w.as_dict() for w, _ in self.admissible]


# -- the algebra and its term list --------------------------------------------------------

def source_algebra(N: int) -> SuperAlgebra:
    """Projected, split algebra for even N; plain su(2,2|N) (no Omega exists) for odd N."""
    if N % 2 == 0:
        from .projection import projected_su22n
        return projected_su22n(N)[0]
    from .builder import build_su22N
    return build_su22N(N, allow_odd=True)


def _family_key(g: Gen, even: bool, symmetric: bool, pins: Mapping[str, Fraction]) -> str:
    fam = family_of(g)
    if fam in pins:
        return fam
    if not symmetric:
        return g.name
    if even and fam == "At":
        return "k"     # A sits in the K sector
    return fam


@dataclass
class TermModel:
    """Integer exponent rows (half units) over the free families."""

    families: List[str]
    rows: np.ndarray            # (terms, families) of int8 in {-1, 0, 1, 2}
    const: np.ndarray           # contribution of pinned families, per term
    terms: List[Tuple[Gen, Gen, Gen, object]]
    bosonic: np.ndarray         # mask: spacetime-only terms
    need: np.ndarray            # mask: terms that must survive for (ii)
    qqh: np.ndarray             # mask: {Q~,Q~} -> H terms
    impossible: bool            # a target entry has no matching term at all


def term_model(alg: SuperAlgebra, spec: SearchSpec) -> TermModel:
    pins = dict(spec.pins)
    even = spec.N % 2 == 0
    names = {g: rename(g) for g in alg.basis}
    key = {g: _family_key(names[g][0], even, spec.symmetric, pins) for g in alg.basis}
    fams = sorted({k for k in key.values() if k not in pins},
                  key=lambda f: (f not in BOSONIC_FAMILIES,
                                 BOSONIC_FAMILIES.index(f) if f in BOSONIC_FAMILIES else 0, f))
    col = {f: i for i, f in enumerate(fams)}
    terms = []
    rows = []
    const = []
    for (x, y), v in alg.table.items():
        nx, sx = names[x]
        ny, sy = names[y]
        for z, c in v._d.items():
            nz, sz = names[z]
            r = np.zeros(len(fams), dtype=np.int8)
            k0 = 0
            for g, s in ((x, 1), (y, 1), (z, -1)):
                f = key[g]
                if f in pins:
                    k0 += s * int(2 * pins[f])
                else:
                    r[col[f]] += s
            rows.append(r)
            const.append(k0)
            terms.append((nx, ny, nz, c * (sx * sy * sz)))
    rows = np.array(rows, dtype=np.int8).reshape(len(terms), len(fams))
    const = np.array(const, dtype=np.int64)
    sp = set(SPACETIME_KINDS)
    bosonic = np.array([x.kind in sp and y.kind in sp and z.kind in sp for x, y, z, _ in terms], dtype=bool)
    target = galilean_target("repaired")
    want = {}
    for (a, b), val in target.table.items():
        for z, c in val._d.items():
            want[(a, b, z)] = c
    need = np.zeros(len(terms), dtype=bool)
    found = set()
    pos = {g: i for i, g in enumerate(target.basis)}
    for t, (x, y, z, c) in enumerate(terms):
        if not bosonic[t]:
            continue
        # orient as the target table stores it
        if pos[x] <= pos[y]:
            k, cc = (x, y, z), c
        else:
            k, cc = (y, x, z), -c
        if k in want and want[k] == cc:
            need[t] = True
            found.add(k)
    qqh = np.array([x.kind in Q_KINDS and y.kind in Q_KINDS and z == Gen("H")
                    for x, y, z, _ in terms], dtype=bool)
    return TermModel(fams, rows, const, terms, bosonic, need, qqh, found != set(want))


# -- staged scan ---------------------------------------------------------------------------

def _product(values: np.ndarray, k: int) -> np.ndarray:
    if k == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.meshgrid(*([values] * k), indexing="ij")
    return np.stack([g.reshape(-1) for g in grids], axis=1).astype(np.int64)


def _chunks(values: np.ndarray, k: int, size: int) -> Iterator[np.ndarray]:
    """Lexicographic product of ``values`` over k slots, in blocks of rows."""
    if k == 0:
        yield np.zeros((1, 0), dtype=np.int64)
        return
    inner = 0
    while inner < k and len(values) ** (inner + 1) <= size:
        inner += 1
    inner = max(inner, 1)
    tail = _product(values, inner)
    for head in itertools.product(values, repeat=k - inner):
        block = np.empty((tail.shape[0], k), dtype=np.int64)
        block[:, :k - inner] = head
        block[:, k - inner:] = tail
        yield block


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("GALSCA_WORKERS", "1")))
    except ValueError:
        return 1


def _check_cap(n: int, spec: SearchSpec, what: str):
    if n > spec.cap:
        raise SpaceTooLarge(f"{what} has {n} assignments, over the cap of {spec.cap}")


def scan_weights(spec: SearchSpec, alg: Optional[SuperAlgebra] = None, verify: bool = True) -> SearchResult:
    t0 = time.perf_counter()
    alg = source_algebra(spec.N) if alg is None else alg
    tm = term_model(alg, spec)
    vals = np.array([int(2 * v) for v in spec.grid()], dtype=np.int64)
    nb = sum(f in BOSONIC_FAMILIES for f in tm.families)
    nr = len(tm.families) - nb
    naive = len(vals) ** len(tm.families)
    _check_cap(len(vals) ** nb, spec, "the spacetime block")
    _check_cap(len(vals) ** nr, spec, "the fermionic/internal block")
    rejected = {"divergent": 0, "not_galilean": 0, "no_susy": 0}
    stage = {"naive": naive, "spacetime": len(vals) ** nb, "rest_per_survivor": len(vals) ** nr}

    # stage 1: spacetime families decide (ii) and the spacetime part of (i)
    bmask = tm.bosonic
    Ab = tm.rows[bmask][:, :nb].astype(np.int64)
    cb = tm.const[bmask]
    need_b = tm.need[bmask]
    B = _product(vals, nb)
    E = B @ Ab.T + cb
    div = (E > 0).any(axis=1)
    if tm.impossible:
        gal = np.zeros(len(B), dtype=bool)
    else:
        gal = (E[:, need_b] == 0).all(axis=1) & (E[:, ~need_b] < 0).all(axis=1)
    survivors = B[~div & gal]
    rejected["divergent"] += int(div.sum()) * len(vals) ** nr
    rejected["not_galilean"] += int((~div & ~gal).sum()) * len(vals) ** nr
    stage["spacetime_survivors"] = len(survivors)

    # stage 2: everything else, per survivor
    rest = ~bmask
    A1 = tm.rows[:, :nb].astype(np.int64)
    A2 = tm.rows[:, nb:].astype(np.int64)
    sel = rest | tm.qqh
    A1s, A2s, cs = A1[sel], A2[sel], tm.const[sel]
    qqh_s = tm.qqh[sel]

    def run(bw: np.ndarray) -> Tuple[List[np.ndarray], int, int]:
        base = A1s @ bw + cs
        hits = []
        ndiv = nsusy = 0
        for block in _chunks(vals, nr, 1 << 16):
            E2 = block @ A2s.T + base
            ok = ~(E2 > 0).any(axis=1)
            susy = (E2[:, qqh_s] == 0).any(axis=1) if qqh_s.any() else np.zeros(len(block), bool)
            ndiv += int((~ok).sum())
            nsusy += int((ok & ~susy).sum())
            for r in block[ok & susy]:
                hits.append(np.concatenate([bw, r]))
        return hits, ndiv, nsusy

    with ThreadPoolExecutor(max_workers=_workers()) as ex:
        outs = list(ex.map(run, list(survivors)))
    hits = []
    for h, nd, ns in outs:
        hits.extend(h)
        rejected["divergent"] += nd
        rejected["no_susy"] += ns
    hits.sort(key=lambda r: tuple(r))

    admissible = []
    for r in hits:
        w = _assignment(tm.families, r, spec, alg)
        if verify:
            out, rep = contract_with_report(alg, w)
            if out is None or rep.jacobi_violations != 0 or not predicate(out):
                raise AssertionError(f"scan and direct contraction disagree at {w.as_dict()}")
        else:
            rep = None
        admissible.append((w, rep))
    return SearchResult(spec, tm.families, admissible, naive, len(survivors) * len(vals) ** nr + len(B),
                        rejected, time.perf_counter() - t0, stage)


def _assignment(families: Sequence[str], row, spec: SearchSpec, alg: SuperAlgebra) -> WeightAssignment:
    d = {f: Fraction(int(v), 2) for f, v in zip(families, row)}
    d.update(dict(spec.pins))
    if spec.N % 2 == 0 and "k" in d and spec.symmetric:
        d["At"] = d["k"]
    if not spec.symmetric:
        # per-generator weights: spell out every family too so the map is total
        for g in alg.basis:
            n = rename(g)[0]
            key = _family_key(n, spec.N % 2 == 0, False, dict(spec.pins))
            d.setdefault(key, d.get(key, Fraction(0)))
    return WeightAssignment.of(d)


def predicate(contracted: SuperAlgebra) -> bool:
    """(ii) and (iii) on an already contracted algebra."""
    from .contraction import check_bosonic
    if not check_bosonic(contracted, "repaired").passed:
        return False
    qs = [g for g in contracted.basis if g.kind in Q_KINDS]
    H = Gen("H")
    return any(contracted.entry(x, y)[H] for i, x in enumerate(qs) for y in qs[i:])


# -- oracle ---------------------------------------------------------------------------------

def naive_scan(spec: SearchSpec, alg: Optional[SuperAlgebra] = None) -> List[Dict[str, Fraction]]:
    """Unstaged, unvectorised enumeration of the same predicate (slow; small grids only)."""
    alg = source_algebra(spec.N) if alg is None else alg
    tm = term_model(alg, spec)
    vals = [int(2 * v) for v in spec.grid()]
    rows = [list(map(int, r)) for r in tm.rows]
    const = list(map(int, tm.const))
    need = list(tm.need)
    bos = list(tm.bosonic)
    qqh = list(tm.qqh)
    out = []
    for combo in itertools.product(vals, repeat=len(tm.families)):
        exps = [sum(a * b for a, b in zip(r, combo)) + k for r, k in zip(rows, const)]
        if any(e > 0 for e in exps):
            continue
        if tm.impossible:
            continue
        if any(bos[t] and ((need[t] and e != 0) or (not need[t] and e >= 0)) for t, e in enumerate(exps)):
            continue
        if not any(qqh[t] and e == 0 for t, e in enumerate(exps)):
            continue
        w = {f: Fraction(v, 2) for f, v in zip(tm.families, combo)}
        w.update(dict(spec.pins))
        if spec.N % 2 == 0 and spec.symmetric and "k" in w:
            w["At"] = w["k"]
        out.append(dict(sorted(w.items())))
    return out
