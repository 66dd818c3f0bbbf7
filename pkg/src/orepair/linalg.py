"""Exact linear algebra.

Two flavours live here: vectorised routines over the prime field F_p on numpy
``int64`` arrays (used for the big semilinear-to-linear reductions), and
small generic routines over any field whose elements support ``+ - *`` and
``inverse()`` (used for Gram matrices over F_q sitting inside an extension).
"""

from __future__ import annotations

from typing import Any, Sequence

import numpy as np


# ---------------------------------------------------------------- F_p, numpy

def rref_mod(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``a`` over F_p and its pivot columns."""
    m = np.array(a, dtype=np.int64) % p
    if m.ndim != 2:
        raise ValueError("expected a 2-d array")
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        inv = pow(int(m[r, c]), -1, p)
        m[r] = (m[r] * inv) % p
        col = m[:, c].copy()
        col[r] = 0
        if col.any():
            m = (m - np.outer(col, m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rank_mod(a: np.ndarray, p: int) -> int:
    if np.size(a) == 0:
        return 0
    return len(rref_mod(a, p)[1])


def nullspace_mod(a: np.ndarray, p: int) -> np.ndarray:
    """Rows form a basis of ``{x : a @ x = 0}`` over F_p."""
    a = np.asarray(a, dtype=np.int64)
    cols = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    r, pivots = rref_mod(a, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for j, pc in enumerate(pivots):
            basis[k, pc] = (-r[j, f]) % p
    return basis


def solve_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """One solution ``x`` of ``a @ x = b`` over F_p, or ``None``."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64).reshape(-1, 1)
    aug = np.concatenate([a, b], axis=1)
    r, pivots = rref_mod(aug, p)
    n = a.shape[1]
    if n in pivots:
        return None
    x = np.zeros(n, dtype=np.int64)
    for j, pc in enumerate(pivots):
        x[pc] = r[j, n]
    return x


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """``a @ b`` over F_p for reduced inputs; goes through float64 BLAS when that is exact."""
    inner = a.shape[-1]
    if (p - 1) ** 2 * max(inner, 1) < 2 ** 52:
        prod = np.asarray(a, dtype=np.float64) @ np.asarray(b, dtype=np.float64)
        return np.rint(prod).astype(np.int64) % p
    return (np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64)) % p


def matpow_mod(a: np.ndarray, k: int, p: int) -> np.ndarray:
    n = a.shape[0]
    result = np.eye(n, dtype=np.int64)
    base = np.array(a, dtype=np.int64) % p
    while k:
        if k & 1:
            result = matmul_mod(result, base, p)
        base = matmul_mod(base, base, p)
        k >>= 1
    return result


# ------------------------------------------------------------ generic fields

def _is_zero(x: Any) -> bool:
    return x == 0 if isinstance(x, int) else x.is_zero()


def rref(matrix: Sequence[Sequence[Any]]) -> tuple[list[list[Any]], list[int]]:
    """Row reduction over an arbitrary exact field."""
    m = [list(row) for row in matrix]
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if not _is_zero(m[i][c])), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and not _is_zero(m[i][c]):
                fac = m[i][c]
                m[i] = [x - fac * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(matrix: Sequence[Sequence[Any]]) -> int:
    return len(rref(matrix)[1])


def nullspace(matrix: Sequence[Sequence[Any]], zero: Any, one: Any, ncols: int | None = None) -> list[list[Any]]:
    """Basis of the right null space ``{x : M x = 0}``."""
    if not matrix:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return [[one if i == j else zero for j in range(ncols)] for i in range(ncols)]
    cols = len(matrix[0])
    r, pivots = rref(matrix)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        x = [zero] * cols
        x[f] = one
        for j, pc in enumerate(pivots):
            x[pc] = -r[j][f]
        basis.append(x)
    return basis


def det(matrix: Sequence[Sequence[Any]], one: Any) -> Any:
    m = [list(row) for row in matrix]
    n = len(m)
    result = one
    for c in range(n):
        piv = next((i for i in range(c, n) if not _is_zero(m[i][c])), None)
        if piv is None:
            return one - one
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            result = -result
        result = result * m[c][c]
        inv = m[c][c].inverse()
        for i in range(c + 1, n):
            if not _is_zero(m[i][c]):
                fac = m[i][c] * inv
                m[i] = [x - fac * y for x, y in zip(m[i], m[c])]
    return result


def charpoly(matrix: Sequence[Sequence[Any]], zero: Any, one: Any) -> list[Any]:
    """Characteristic polynomial det(xI - M), low-degree first (Berkowitz, division free)."""
    n = len(matrix)
    if n == 0:
        return [one]
    # Berkowitz: build Toeplitz vectors for successive leading principal minors.
    poly = [one, -matrix[0][0]]  # high-degree first
    for k in range(1, n):
        r = [matrix[k][j] for j in range(k)]        # row below the minor
        c = [matrix[i][k] for i in range(k)]        # column right of the minor
        a = [[matrix[i][j] for j in range(k)] for i in range(k)]
        akk = matrix[k][k]
        # t_0 = 1, t_1 = -a_kk, t_{j+2} = -r A^j c
        t = [one, -akk]
        v = c
        for _ in range(k):
            t.append(-sum((ri * vi for ri, vi in zip(r, v)), zero))
            v = [sum((a[i][j] * v[j] for j in range(k)), zero) for i in range(k)]
        # new poly = Toeplitz(t) * poly
        new = []
        for i in range(k + 2):
            s = zero
            for j in range(len(poly)):
                if 0 <= i - j < len(t):
                    s = s + t[i - j] * poly[j]
            new.append(s)
        poly = new
    return list(reversed(poly))
