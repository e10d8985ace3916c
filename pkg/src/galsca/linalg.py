"""Small exact linear-algebra kit over Gaussian rationals.

Matrices are numpy object arrays holding :class:`GaussianRational`
entries. Elimination is fraction-free (Bareiss) so pivots stay integral for
integral input, and nothing here ever touches a float.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

import numpy as np

from .scalars import ONE, ZERO, GaussianRational


def as_exact(rows) -> np.ndarray:
    """Convert nested sequences of ints/Fractions/GaussianRationals."""
    arr = np.array(rows, dtype=object)
    out = np.empty(arr.shape, dtype=object)
    for idx, v in np.ndenumerate(arr):
        out[idx] = GaussianRational.coerce(v)
    return out


def zeros(n: int, m: int | None = None) -> np.ndarray:
    m = n if m is None else m
    out = np.empty((n, m), dtype=object)
    out.fill(ZERO)
    return out


def eye(n: int) -> np.ndarray:
    out = zeros(n)
    for i in range(n):
        out[i, i] = ONE
    return out


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    ra, ca = a.shape
    rb, cb = b.shape
    out = zeros(ra * rb, ca * cb)
    for i in range(ra):
        for j in range(ca):
            if a[i, j]:
                out[i * rb:(i + 1) * rb, j * cb:(j + 1) * cb] = a[i, j] * b
    return out


def matmul(*mats: np.ndarray) -> np.ndarray:
    out = mats[0]
    for m in mats[1:]:
        n, k = out.shape
        k2, p = m.shape
        if k != k2:
            raise ValueError("shape mismatch")
        res = zeros(n, p)
        for i in range(n):
            row = out[i]
            nz = [t for t in range(k) if row[t]]
            for j in range(p):
                acc = ZERO
                for t in nz:
                    x = m[t, j]
                    if x:
                        acc = acc + row[t] * x
                res[i, j] = acc
        out = res
    return out


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return matmul(a, b) - matmul(b, a)


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return matmul(a, b) + matmul(b, a)


def is_zero(a: np.ndarray) -> bool:
    return not any(bool(x) for x in a.flat)


def equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def trace(a: np.ndarray) -> GaussianRational:
    acc = ZERO
    for i in range(min(a.shape)):
        acc = acc + a[i, i]
    return acc


def row_echelon(m: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """Fraction-free (Bareiss) forward elimination.

    Returns the echelon form and the list of pivot columns.
    """
    a = np.array(m, dtype=object, copy=True)
    nrows, ncols = a.shape
    pivots: List[int] = []
    prev = ONE
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        p = next((i for i in range(r, nrows) if a[i, c]), None)
        if p is None:
            continue
        if p != r:
            a[[r, p]] = a[[p, r]]
        piv = a[r, c]
        for i in range(r + 1, nrows):
            f = a[i, c]
            for j in range(c + 1, ncols):
                a[i, j] = (piv * a[i, j] - f * a[r, j]) / prev
            a[i, c] = ZERO
        # earlier pivot columns' below-entries are already zero
        prev = piv
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: np.ndarray) -> int:
    if m.size == 0:
        return 0
    return len(row_echelon(m)[1])


def nullspace(m: np.ndarray) -> List[np.ndarray]:
    """Basis of {x : m x = 0}, one vector per free column, in column order."""
    nrows, ncols = m.shape
    if nrows == 0:
        basis = []
        for j in range(ncols):
            v = np.empty(ncols, dtype=object)
            v.fill(ZERO)
            v[j] = ONE
            basis.append(v)
        return basis
    ech, pivots = row_echelon(m)
    r = len(pivots)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        x = np.empty(ncols, dtype=object)
        x.fill(ZERO)
        x[f] = ONE
        for k in range(r - 1, -1, -1):
            c = pivots[k]
            acc = ZERO
            for j in range(c + 1, ncols):
                if ech[k, j] and x[j]:
                    acc = acc + ech[k, j] * x[j]
            x[c] = -acc / ech[k, c]
        basis.append(x)
    return basis


def nullspace_int(rows: Sequence[Sequence[int]], ncols: int) -> List[List[GaussianRational]]:
    """Rational nullspace of an integer matrix given as a list of rows.

    Same free-column convention as :func:`nullspace`, but eliminates on
    plain Python ints (Bareiss), which is much faster for large sparse
    coefficient matrices.
    """
    a = [list(r) for r in rows if any(r)]
    pivots: List[int] = []
    prev = 1
    r = 0
    nrows = len(a)
    for c in range(ncols):
        if r >= nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        prow = a[r]
        for i in range(r + 1, nrows):
            row = a[i]
            f = row[c]
            if f:
                for j in range(c + 1, ncols):
                    row[j] = (piv * row[j] - f * prow[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    if row[j]:
                        row[j] = (piv * row[j]) // prev
            row[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    from fractions import Fraction
    free = [j for j in range(ncols) if j not in pivots]
    out = []
    for fcol in free:
        x = [Fraction(0)] * ncols
        x[fcol] = Fraction(1)
        for k in range(len(pivots) - 1, -1, -1):
            c = pivots[k]
            acc = sum((a[k][j] * x[j] for j in range(c + 1, ncols) if a[k][j] and x[j]), Fraction(0))
            x[c] = -acc / a[k][c]
        out.append([GaussianRational(v) for v in x])
    return out


def independent_rows(rows: Sequence[np.ndarray]) -> List[int]:
    """Indices of the first maximal independent subset, scanning in order."""
    chosen: List[int] = []
    current = 0
    for i, row in enumerate(rows):
        trial = np.array([rows[j] for j in chosen] + [row], dtype=object)
        rk = rank(trial)
        if rk > current:
            chosen.append(i)
            current = rk
    return chosen


def solve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Unique solution x of a x = b (a square, nonsingular)."""
    n = a.shape[0]
    aug = np.concatenate([a, b.reshape(n, -1)], axis=1)
    ech, pivots = row_echelon(aug)
    if pivots[:n] != list(range(n)):
        raise np.linalg.LinAlgError("singular system")
    k = aug.shape[1] - n
    x = np.empty((n, k), dtype=object)
    x.fill(ZERO)
    for col in range(k):
        for i in range(n - 1, -1, -1):
            acc = ech[i, n + col]
            for j in range(i + 1, n):
                if ech[i, j]:
                    acc = acc - ech[i, j] * x[j, col]
            x[i, col] = acc / ech[i, i]
    return x.reshape(b.shape) if b.ndim == 1 else x


def inverse(a: np.ndarray) -> np.ndarray:
    return solve(a, eye(a.shape[0]))
