"""Graded bracket tables and the tools that check them.

A :class:`SuperAlgebra` stores ``[x, y]`` only for pairs with ``x`` before
``y`` in the basis (plus ``{x, x}`` for odd ``x``); the reversed orientation
is always computed from graded antisymmetry, never stored.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .scalars import ONE, ZERO, GaussianRational, LaurentPoly

# -- generator ids -------------------------------------------------------------

#: every generator kind, in canonical sort order
KINDS: Tuple[str, ...] = (
    # relativistic
    "M", "P", "K_conf", "D", "A", "T_S", "T_A",
    "TS+", "TS-", "TA+", "TA-",
    "Q", "S", "Q+", "Q-", "S+", "S-",
    # Galilean (tilded)
    "H", "B", "F", "Kexp", "At",
    "TtS+", "TtS-", "TtA+", "TtA-",
    "Qt+", "Qt-", "St+", "St-",
)
KIND_ORDER = {k: i for i, k in enumerate(KINDS)}
ODD_KINDS = frozenset({"Q", "S", "Q+", "Q-", "S+", "S-", "Qt+", "Qt-", "St+", "St-"})

_SPACETIME_VECTOR = {"P": (0, 3), "K_conf": (0, 3), "B": (1, 3), "F": (1, 3)}
_SPINOR = {"Q", "S", "Q+", "Q-", "S+", "S-", "Qt+", "Qt-", "St+", "St-"}
_INTERNAL_PAIR = {"T_S", "T_A", "TS+", "TS-", "TA+", "TA-", "TtS+", "TtS-", "TtA+", "TtA-"}
_SCALAR = {"D", "A", "H", "Kexp", "At"}


class UnknownGenerator(KeyError):
    pass


class BasisMismatch(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class Gen:
    """A basis label: ``kind`` plus an index tuple.

    Spinor kinds carry ``(a, alpha)`` (internal index first), internal kinds
    carry an ordered pair ``(a, b)``, ``M`` carries ``(mu, nu)`` with mu < nu.
    """

    kind: str
    indices: Tuple[int, ...] = ()

    def __post_init__(self):
        k, ix = self.kind, self.indices
        if k not in KIND_ORDER:
            raise ValueError(f"unknown generator kind {k!r}")
        if not isinstance(ix, tuple):
            object.__setattr__(self, "indices", tuple(ix))
            ix = self.indices
        if k in _SCALAR:
            ok = ix == ()
        elif k in _SPACETIME_VECTOR:
            lo, hi = _SPACETIME_VECTOR[k]
            ok = len(ix) == 1 and lo <= ix[0] <= hi
        elif k == "M":
            ok = len(ix) == 2 and 0 <= ix[0] < ix[1] <= 3
        elif k in _SPINOR:
            ok = len(ix) == 2 and ix[0] >= 1 and 1 <= ix[1] <= 4
        else:
            ok = len(ix) == 2 and 1 <= ix[0] <= ix[1]
            if k in {"T_A", "TA+", "TA-", "TtA+", "TtA-"} and ok:
                ok = ix[0] < ix[1]
        if not ok:
            raise ValueError(f"invalid indices {ix} for kind {k}")

    @property
    def odd(self) -> bool:
        return self.kind in ODD_KINDS

    @property
    def parity(self) -> int:
        return 1 if self.kind in ODD_KINDS else 0

    @property
    def sort_key(self):
        return (KIND_ORDER[self.kind], self.indices)

    def __lt__(self, other: "Gen"):
        return self.sort_key < other.sort_key

    @property
    def name(self) -> str:
        if not self.indices:
            return self.kind
        return f"{self.kind}[{','.join(map(str, self.indices))}]"

    def __str__(self):
        return self.name

    def __repr__(self):
        return f"Gen({self.name})"

    @classmethod
    def parse(cls, name: str) -> "Gen":
        if "[" not in name:
            return cls(name)
        kind, rest = name.split("[", 1)
        ix = tuple(int(t) for t in rest.rstrip("]").split(",") if t)
        return cls(kind, ix)


def parity_of(g: Gen) -> int:
    return g.parity


# -- linear combinations ---------------------------------------------------------

def _is_zero(c) -> bool:
    return not c


class LinearCombination:
    """Immutable sparse sum of generators; zero coefficients are dropped."""

    __slots__ = ("_d",)

    def __init__(self, terms: Mapping[Gen, object] | Iterable[Tuple[Gen, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: Dict[Gen, object] = {}
        for g, c in items:
            if not isinstance(c, (GaussianRational, LaurentPoly)):
                c = GaussianRational.coerce(c)
            if g in d:
                d[g] = d[g] + c
            else:
                d[g] = c
        self._d = {g: c for g, c in d.items() if c}

    @classmethod
    def of(cls, g: Gen, coeff=ONE) -> "LinearCombination":
        return cls({g: coeff})

    @classmethod
    def _raw(cls, d: Dict[Gen, object]) -> "LinearCombination":
        lc = cls.__new__(cls)
        lc._d = {g: c for g, c in d.items() if c}
        return lc

    def items(self) -> List[Tuple[Gen, object]]:
        return sorted(self._d.items(), key=lambda kv: kv[0].sort_key)

    def __iter__(self) -> Iterator[Gen]:
        return iter(sorted(self._d, key=lambda g: g.sort_key))

    def __len__(self):
        return len(self._d)

    def __bool__(self):
        return bool(self._d)

    def __getitem__(self, g: Gen):
        return self._d.get(g, ZERO)

    def __contains__(self, g: Gen):
        return g in self._d

    @property
    def support(self) -> frozenset:
        return frozenset(self._d)

    def as_dict(self) -> Dict[Gen, object]:
        return dict(self._d)

    def __add__(self, other: "LinearCombination"):
        d = dict(self._d)
        for g, c in other._d.items():
            d[g] = d[g] + c if g in d else c
        return LinearCombination._raw(d)

    def __sub__(self, other: "LinearCombination"):
        return self + (-other)

    def __neg__(self):
        return LinearCombination._raw({g: -c for g, c in self._d.items()})

    def __mul__(self, k):
        if not isinstance(k, (GaussianRational, LaurentPoly)):
            k = GaussianRational.coerce(k)
        return LinearCombination._raw({g: c * k for g, c in self._d.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self._d == other._d

    def __hash__(self):
        return hash(frozenset(self._d.items()))

    def map_scalars(self, f: Callable) -> "LinearCombination":
        return LinearCombination((g, f(c)) for g, c in self._d.items())

    def __repr__(self):
        if not self._d:
            return "0"
        return " + ".join(f"({c})*{g.name}" for g, c in self.items())


LC = LinearCombination
ZERO_LC = LinearCombination()


def as_lc(x) -> LinearCombination:
    if isinstance(x, LinearCombination):
        return x
    if isinstance(x, Gen):
        return LinearCombination.of(x)
    raise TypeError(f"expected Gen or LinearCombination, got {type(x).__name__}")


# -- the algebra -------------------------------------------------------------------

@dataclass(frozen=True)
class JacobiViolation:
    triple: Tuple[Gen, Gen, Gen]
    residual: LinearCombination


class SuperAlgebra:
    """Basis, grading and the canonically oriented sparse bracket table."""

    def __init__(self, basis: Sequence[Gen], table: Mapping[Tuple[Gen, Gen], LinearCombination],
                 domain: str = "constant", name: str = "", check: bool = True):
        if domain not in ("constant", "laurent"):
            raise ValueError("domain must be 'constant' or 'laurent'")
        self.basis: Tuple[Gen, ...] = tuple(basis)
        self.position: Dict[Gen, int] = {g: i for i, g in enumerate(self.basis)}
        if len(self.position) != len(self.basis):
            raise ValueError("duplicate generators in basis")
        self.domain = domain
        self.name = name
        tab: Dict[Tuple[Gen, Gen], LinearCombination] = {}
        for (x, y), v in table.items():
            if not v:
                continue
            if self.position[x] > self.position[y]:
                raise ValueError(f"table entry ({x}, {y}) is not canonically ordered")
            tab[(x, y)] = v
        self.table = tab
        if check:
            self._check()

    @property
    def grading(self) -> Dict[Gen, int]:
        return {g: g.parity for g in self.basis}

    def _check(self):
        pos = self.position
        for (x, y), v in self.table.items():
            if x == y and not x.odd:
                raise ValueError(f"[{x}, {x}] must vanish for even {x}")
            want = (x.parity + y.parity) % 2
            for g in v.support:
                if g not in pos:
                    raise ValueError(f"[{x}, {y}] leaves the basis through {g}")
                if g.parity != want:
                    raise ValueError(f"[{x}, {y}] has wrong parity term {g}")

    def __len__(self):
        return len(self.basis)

    @property
    def dims(self) -> Tuple[int, int]:
        odd = sum(1 for g in self.basis if g.odd)
        return len(self.basis) - odd, odd

    def entry(self, x: Gen, y: Gen) -> LinearCombination:
        """[x, y] for basis generators, applying graded antisymmetry if needed."""
        pos = self.position
        if x not in pos:
            raise UnknownGenerator(x)
        if y not in pos:
            raise UnknownGenerator(y)
        if pos[x] <= pos[y]:
            return self.table.get((x, y), ZERO_LC)
        v = self.table.get((y, x))
        if v is None:
            return ZERO_LC
        return v if (x.odd and y.odd) else -v

    def sign(self, x: Gen, y: Gen) -> int:
        return -1 if (x.odd and y.odd) else 1

    def pairs(self) -> Iterator[Tuple[Gen, Gen]]:
        """Canonical pairs (x before-or-equal y)."""
        b = self.basis
        for i in range(len(b)):
            for j in range(i, len(b)):
                yield b[i], b[j]

    def restrict(self, subset: Iterable[Gen], name: str = "") -> "SuperAlgebra":
        sub = [g for g in self.basis if g in set(subset)]
        s = set(sub)
        tab = {}
        for (x, y), v in self.table.items():
            if x in s and y in s:
                if not v.support <= s:
                    raise ValueError(f"subset not closed: [{x}, {y}] = {v}")
                tab[(x, y)] = v
        return SuperAlgebra(sub, tab, self.domain, name or self.name)

    def reordered(self, order: Sequence[Gen]) -> "SuperAlgebra":
        """Same algebra with the basis listed in ``order``."""
        if set(order) != set(self.basis):
            raise BasisMismatch("reordering must be a permutation of the basis")
        pos = {g: i for i, g in enumerate(order)}
        tab = {}
        for (x, y), v in self.table.items():
            if pos[x] <= pos[y]:
                tab[(x, y)] = v
            else:
                tab[(y, x)] = v if (x.odd and y.odd) else -v
        return SuperAlgebra(order, tab, self.domain, self.name)

    def with_entry(self, x: Gen, y: Gen, value: LinearCombination) -> "SuperAlgebra":
        """Copy with [x, y] replaced (graded antisymmetry handled)."""
        tab = dict(self.table)
        if self.position[x] <= self.position[y]:
            tab[(x, y)] = value
        else:
            tab[(y, x)] = value if (x.odd and y.odd) else -value
        return SuperAlgebra(self.basis, tab, self.domain, self.name)

    def __eq__(self, other):
        if not isinstance(other, SuperAlgebra):
            return NotImplemented
        return (self.basis == other.basis and self.domain == other.domain
                and self.table == other.table)

    def __repr__(self):
        e, o = self.dims
        return f"SuperAlgebra({self.name or 'unnamed'}: {e} even + {o} odd, {self.domain})"


class TableBuilder:
    """Accumulates bracket definitions in either orientation."""

    def __init__(self, basis: Sequence[Gen]):
        self.basis = tuple(basis)
        self.position = {g: i for i, g in enumerate(self.basis)}
        self.table: Dict[Tuple[Gen, Gen], Dict[Gen, object]] = {}
        self.defined: set = set()

    def _orient(self, x: Gen, y: Gen):
        if self.position[x] <= self.position[y]:
            return (x, y), 1
        return (y, x), (1 if (x.odd and y.odd) else -1)

    def add(self, x: Gen, y: Gen, z: Gen, coeff) -> None:
        """Accumulate ``coeff * z`` into [x, y]."""
        if not coeff:
            return
        key, s = self._orient(x, y)
        d = self.table.setdefault(key, {})
        c = coeff * s if s == -1 else coeff
        d[z] = d[z] + c if z in d else c

    def set(self, x: Gen, y: Gen, lc: LinearCombination) -> None:
        key, s = self._orient(x, y)
        if key in self.defined:
            have = LinearCombination._raw(self.table.get(key, {}))
            new = lc if s == 1 else -lc
            if have != new:
                raise ValueError(f"conflicting definitions for [{x}, {y}]")
            return
        self.defined.add(key)
        self.table[key] = (lc if s == 1 else -lc).as_dict()

    def build(self, domain="constant", name="") -> SuperAlgebra:
        tab = {k: LinearCombination(v) for k, v in self.table.items()}
        return SuperAlgebra(self.basis, tab, domain, name)


# -- brackets -------------------------------------------------------------------------

def bracket(alg: SuperAlgebra, x, y) -> LinearCombination:
    """Bilinear extension of the table to linear combinations."""
    x, y = as_lc(x), as_lc(y)
    acc: Dict[Gen, object] = {}
    for gx, cx in x._d.items():
        for gy, cy in y._d.items():
            v = alg.entry(gx, gy)
            if not v:
                continue
            k = cx * cy
            for g, c in v._d.items():
                t = c * k
                acc[g] = acc[g] + t if g in acc else t
    return LinearCombination._raw(acc)


def jacobi_residual(alg: SuperAlgebra, x: Gen, y: Gen, z: Gen) -> LinearCombination:
    """(-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]]."""
    def s(a, b):
        return -1 if (a.odd and b.odd) else 1
    r = bracket(alg, x, alg.entry(y, z)) * s(x, z)
    r = r + bracket(alg, y, alg.entry(z, x)) * s(y, x)
    r = r + bracket(alg, z, alg.entry(x, y)) * s(z, y)
    return r


def _canonical_triple(x: Gen, y: Gen, z: Gen) -> Tuple[Gen, Gen, Gen]:
    return tuple(sorted((x, y, z), key=lambda g: g.sort_key))


def verify_graded_jacobi_reference(alg: SuperAlgebra,
                                   subset: Optional[Iterable[Gen]] = None) -> List[JacobiViolation]:
    """Straight triple loop over linear combinations; works in any domain."""
    gens = list(alg.basis) if subset is None else [g for g in alg.basis if g in set(subset)]
    gens.sort(key=lambda g: g.sort_key)
    out = []
    for i, j, k in itertools.combinations_with_replacement(range(len(gens)), 3):
        t = (gens[i], gens[j], gens[k])
        r = jacobi_residual(alg, *t)
        if r:
            out.append(JacobiViolation(t, r))
    return out


# -- integer structure tensor (fast exact path) ------------------------------------------

@dataclass
class StructureTensor:
    """Structure constants scaled to integers: F[i, j, k] / scale."""

    basis: Tuple[Gen, ...]
    re: np.ndarray
    im: Optional[np.ndarray]
    scale: int
    parity: np.ndarray

    @property
    def complex(self) -> bool:
        return self.im is not None


def structure_tensor(alg: SuperAlgebra, dtype=np.int64) -> StructureTensor:
    if alg.domain != "constant":
        raise ValueError("integer structure tensor needs a constant-domain algebra")
    n = len(alg.basis)
    pos = alg.position
    den = 1
    any_im = False
    for v in alg.table.values():
        for c in v._d.values():
            den = math.lcm(den, c.re.denominator, c.im.denominator)
            any_im = any_im or bool(c.im)
    re = np.zeros((n, n, n), dtype=dtype)
    im = np.zeros((n, n, n), dtype=dtype) if any_im else None
    for (x, y), v in alg.table.items():
        i, j = pos[x], pos[y]
        sgn = -1 if (x.odd and y.odd) else 1
        for g, c in v._d.items():
            k = pos[g]
            a = int(c.re * den)
            re[i, j, k] = a
            if i != j:
                re[j, i, k] = -sgn * a
            if im is not None:
                b = int(c.im * den)
                im[i, j, k] = b
                if i != j:
                    im[j, i, k] = -sgn * b
    par = np.array([g.parity for g in alg.basis], dtype=np.int64)
    return StructureTensor(alg.basis, re, im, den, par)


def _cmm(ar, ai, br, bi):
    """Complex matmul on split real/imag arrays (imag may be None)."""
    if ai is None and bi is None:
        return np.matmul(ar, br), None
    if ai is None:
        return np.matmul(ar, br), np.matmul(ar, bi)
    if bi is None:
        return np.matmul(ar, br), np.matmul(ai, br)
    return (np.matmul(ar, br) - np.matmul(ai, bi),
            np.matmul(ar, bi) + np.matmul(ai, br))


def _entry_bound(st: StructureTensor) -> int:
    b = int(np.abs(st.re).max()) if st.re.size else 0
    if st.im is not None and st.im.size:
        b = max(b, int(np.abs(st.im).max()))
    return b


def _work_dtype(st: StructureTensor):
    """Narrowest dtype in which every Jacobi partial sum is an exact integer.

    Each sum has at most 3n products (6n with complex parts) of entries
    bounded by b, so float64 is exact below 2**53 and int64 below 2**63.
    """
    n = len(st.basis)
    worst = 6 * max(n, 1) * _entry_bound(st) ** 2
    if worst < 2 ** 52:
        return np.float64
    if worst < 2 ** 62:
        return np.int64
    return object


def _jacobi_rows(st: StructureTensor, rows: Sequence[int], allowed: np.ndarray, dtype):
    """Nonzero Jacobi sums for triples (i, j, k), i in rows, i <= j <= k, all allowed."""
    n = len(st.basis)
    F = st.re.astype(dtype)
    Fi = None if st.im is None else st.im.astype(dtype)
    par = st.parity
    flat = F.reshape(n * n, n)
    flat_i = None if Fi is None else Fi.reshape(n * n, n)
    idx = np.arange(n)
    s3 = np.where(np.outer(par, par) % 2 == 1, -1, 1).astype(dtype)
    found = []
    for i in rows:
        if not allowed[i]:
            continue
        # T1[j,k,:] = [e_i, [e_j, e_k]]
        t1r, t1i = _cmm(flat, flat_i, F[i], None if Fi is None else Fi[i])
        t1r = t1r.reshape(n, n, n)
        t1i = None if t1i is None else t1i.reshape(n, n, n)
        # T2[j,k,:] = [e_j, [e_k, e_i]]
        t2r, t2i = _cmm(F[:, i, :][None], None if Fi is None else Fi[:, i, :][None], F, Fi)
        # T3[j,k,:] = [e_k, [e_i, e_j]]
        t3r, t3i = _cmm(F[i][None], None if Fi is None else Fi[i][None], F, Fi)
        t3r = t3r.transpose(1, 0, 2)
        t3i = None if t3i is None else t3i.transpose(1, 0, 2)
        sgn = np.where((par[i] * par) % 2 == 1, -1, 1).astype(dtype)
        J = sgn[None, :, None] * t1r + sgn[:, None, None] * t2r + s3.T[:, :, None] * t3r
        Jim = None
        if t1i is not None or t2i is not None or t3i is not None:
            z = np.zeros_like(J)
            Jim = (sgn[None, :, None] * (z if t1i is None else t1i)
                   + sgn[:, None, None] * (z if t2i is None else t2i)
                   + s3.T[:, :, None] * (z if t3i is None else t3i))
        mask = (idx[:, None] >= i) & (idx[None, :] >= idx[:, None])
        mask &= allowed[:, None] & allowed[None, :]
        nz = np.any(J != 0, axis=2)
        if Jim is not None:
            nz |= np.any(Jim != 0, axis=2)
        for j, k in zip(*np.nonzero(nz & mask)):
            re = J[j, k]
            im = None if Jim is None else Jim[j, k]
            found.append((int(i), int(j), int(k), re, im))
    return found


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("GALSCA_WORKERS", "1")))
    except ValueError:
        return 1


def _residual_from_vector(basis, re, im, scale) -> LinearCombination:
    den = scale * scale
    d = {}
    nzs = set(np.nonzero(re)[0].tolist())
    if im is not None:
        nzs |= set(np.nonzero(im)[0].tolist())
    for m in sorted(nzs):
        a = int(re[m])
        b = 0 if im is None else int(im[m])
        d[basis[m]] = GaussianRational(Fraction(a, den), Fraction(b, den))
    return LinearCombination._raw(d)


def _jacobi_raw(alg: SuperAlgebra, subset, workers):
    n = len(alg.basis)
    allowed = np.ones(n, dtype=bool)
    if subset is not None:
        keep = set(subset)
        allowed = np.array([g in keep for g in alg.basis], dtype=bool)
    st = structure_tensor(alg)
    dtype = _work_dtype(st)
    if dtype is object:
        st = structure_tensor(alg, dtype=object)
    nw = workers or _workers()
    rows = list(range(n))
    if nw > 1:
        from concurrent.futures import ThreadPoolExecutor
        chunks = [rows[w::nw] for w in range(nw)]
        with ThreadPoolExecutor(nw) as ex:
            parts = list(ex.map(lambda r: _jacobi_rows(st, r, allowed, dtype), chunks))
        raw = [t for p in parts for t in p]
    else:
        raw = _jacobi_rows(st, rows, allowed, dtype)
    return st, raw


def verify_graded_jacobi(alg: SuperAlgebra, subset: Optional[Iterable[Gen]] = None,
                         workers: Optional[int] = None) -> List[JacobiViolation]:
    """All unordered basis triples (with repetition) whose Jacobi sum is nonzero.

    Constant-domain algebras go through an exact tensor contraction of the
    integer-scaled structure constants (float64 BLAS only when a bound
    guarantees every partial sum is an exactly representable integer).
    Each violation is reported with its triple sorted by generator order, so
    the result does not depend on how the basis happens to be listed.
    ``workers`` (default: $GALSCA_WORKERS or 1) splits the first index of
    the triple across threads; the union is sorted, so output is identical.
    """
    if alg.domain != "constant":
        return verify_graded_jacobi_reference(alg, subset)
    if not alg.basis:
        return []
    st, raw = _jacobi_raw(alg, subset, workers)
    b = alg.basis
    out = []
    for i, j, k, re, im in raw:
        t = (b[i], b[j], b[k])
        ct = _canonical_triple(*t)
        if ct == t:
            r = _residual_from_vector(b, re, im, st.scale)
        else:
            r = jacobi_residual(alg, *ct)
        if r:
            out.append(JacobiViolation(ct, r))
    out.sort(key=lambda v: tuple(g.sort_key for g in v.triple))
    return out


def count_jacobi_violations(alg: SuperAlgebra, subset: Optional[Iterable[Gen]] = None,
                            workers: Optional[int] = None) -> int:
    """Number of violating triples, without materializing residuals."""
    if alg.domain != "constant":
        return len(verify_graded_jacobi_reference(alg, subset))
    if not alg.basis:
        return 0
    return len(_jacobi_raw(alg, subset, workers)[1])


# -- center, substructures, comparison ----------------------------------------------------

def compute_center(alg: SuperAlgebra) -> List[LinearCombination]:
    """Basis of {x : [x, g] = 0 for every basis generator g}."""
    from .linalg import nullspace_int, nullspace
    if alg.domain != "constant":
        raise ValueError("center is only computed for constant-domain algebras")
    n = len(alg.basis)
    st = structure_tensor(alg, dtype=object)
    b = alg.basis
    if st.im is None:
        # rows (g, k): sum_i x_i F[i, g, k] = 0
        M = st.re.transpose(1, 2, 0).reshape(n * n, n)
        rows = {tuple(int(v) for v in r) for r in M if any(r)}
        vecs = nullspace_int(sorted(rows), n)
        out = []
        for v in vecs:
            out.append(LinearCombination((b[i], c) for i, c in enumerate(v) if c))
        return out
    re = st.re.transpose(1, 2, 0).reshape(n * n, n)
    im = st.im.transpose(1, 2, 0).reshape(n * n, n)
    rows = []
    for r1, r2 in zip(re, im):
        if any(r1) or any(r2):
            rows.append([GaussianRational(int(p), int(q)) for p, q in zip(r1, r2)])
    vecs = nullspace(np.array(rows, dtype=object).reshape(len(rows), n))
    return [LinearCombination((b[i], c) for i, c in enumerate(v) if c) for v in vecs]


@dataclass(frozen=True)
class SubstructureReport:
    is_subalgebra: bool
    is_ideal: bool
    is_abelian: bool
    escapes: Tuple[Tuple[Gen, Gen], ...] = ()


def check_substructure(alg: SuperAlgebra, subset: Iterable[Gen],
                       ambient: Optional[Iterable[Gen]] = None) -> SubstructureReport:
    """Closure flags for the span of ``subset`` (basis generators).

    ``is_ideal`` is relative to ``ambient`` (default: the whole basis).
    """
    sub = [g for g in alg.basis if g in set(subset)]
    missing = set(subset) - set(sub)
    if missing:
        raise UnknownGenerator(sorted(missing, key=lambda g: g.sort_key)[0])
    s = set(sub)
    amb = list(alg.basis) if ambient is None else [g for g in alg.basis if g in set(ambient)]
    is_sub = True
    abelian = True
    escapes = []
    for x, y in itertools.combinations_with_replacement(sub, 2):
        v = alg.entry(x, y)
        if v:
            abelian = False
            if not v.support <= s:
                is_sub = False
                escapes.append((x, y))
    ideal = True
    for x in sub:
        for y in amb:
            v = alg.entry(x, y)
            if v and not v.support <= s:
                ideal = False
                break
        if not ideal:
            break
    return SubstructureReport(is_sub, ideal, abelian, tuple(escapes))


@dataclass(frozen=True)
class TableDiff:
    left: Gen
    right: Gen
    a_value: LinearCombination
    b_value: LinearCombination


def compare_tables(a: SuperAlgebra, b: SuperAlgebra,
                   mapping: Optional[Mapping[Gen, Gen]] = None) -> List[TableDiff]:
    """Pairs of ``a`` whose bracket, pushed through ``mapping``, differs in ``b``."""
    if mapping is None:
        mapping = {g: g for g in a.basis}
    if len(a.basis) != len(b.basis):
        raise BasisMismatch(f"basis sizes differ: {len(a.basis)} vs {len(b.basis)}")
    if set(mapping) != set(a.basis) or set(mapping.values()) != set(b.basis):
        raise BasisMismatch("mapping is not a bijection between the two bases")
    for g, h in mapping.items():
        if g.parity != h.parity:
            raise BasisMismatch(f"mapping {g} -> {h} does not preserve grading")
    diffs = []
    for x, y in a.pairs():
        va = a.entry(x, y)
        pushed = LinearCombination((mapping[g], c) for g, c in va._d.items())
        vb = b.entry(mapping[x], mapping[y])
        if pushed != vb:
            diffs.append(TableDiff(x, y, pushed, vb))
    return diffs


def change_basis(alg: SuperAlgebra, new_basis: Sequence[Gen],
                 new_in_old: Mapping[Gen, LinearCombination],
                 old_in_new: Mapping[Gen, LinearCombination],
                 name: str = "") -> SuperAlgebra:
    """Re-express ``alg`` in ``new_basis``.

    ``new_in_old`` gives each new generator as a combination of old ones
    (generators absent from it are kept as themselves); ``old_in_new`` is
    the inverse map for every old generator that was replaced.
    """
    def expand(g: Gen) -> LinearCombination:
        return new_in_old.get(g) or LinearCombination.of(g)

    def back(v: LinearCombination) -> LinearCombination:
        acc: Dict[Gen, object] = {}
        for g, c in v._d.items():
            img = old_in_new.get(g)
            if img is None:
                acc[g] = acc[g] + c if g in acc else c
                continue
            for h, d in img._d.items():
                t = c * d
                acc[h] = acc[h] + t if h in acc else t
        return LinearCombination._raw(acc)

    tab = {}
    nb = tuple(new_basis)
    exp = {g: expand(g) for g in nb}
    for i in range(len(nb)):
        for j in range(i, len(nb)):
            x, y = nb[i], nb[j]
            if x == y and not x.odd:
                continue
            v = back(bracket(alg, exp[x], exp[y]))
            if v:
                tab[(x, y)] = v
    return SuperAlgebra(nb, tab, alg.domain, name or alg.name)


def map_coefficients(alg: SuperAlgebra, f: Callable, domain: str, name: str = "") -> SuperAlgebra:
    tab = {k: v.map_scalars(f) for k, v in alg.table.items()}
    return SuperAlgebra(alg.basis, tab, domain, name or alg.name)
