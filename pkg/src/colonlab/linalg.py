"""Dense linear algebra over Z/p on numpy arrays."""

from __future__ import annotations

import numpy as np


def dtype_for(p: int, inner: int = 1):
    """int64 when every intermediate product-sum fits, else exact Python ints."""
    if (p - 1) * (p - 1) * max(inner, 2) < (1 << 62):
        return np.int64
    return object


def as_matrix(rows, ncols: int, p: int, inner: int = 1) -> np.ndarray:
    a = np.zeros((len(rows), ncols), dtype=dtype_for(p, inner))
    for i, row in enumerate(rows):
        for j, c in row.items():
            a[i, j] = c % p
    return a


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p; returns (nonzero rows, pivot columns)."""
    a = np.array(a, dtype=dtype_for(p), copy=True) % p
    a = a[a.any(axis=1)]
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    # forward elimination, touching only rows below and columns right of the pivot
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r, c:] = (a[r, c:] * inv) % p
        below = r + 1 + np.flatnonzero(a[r + 1:, c])
        if below.size:
            a[below, c:] = (a[below, c:] - np.outer(a[below, c], a[r, c:]) % p) % p
        pivots.append(c)
        r += 1
    a = a[:r]
    # back substitution
    for i in range(r - 1, 0, -1):
        c = pivots[i]
        above = np.flatnonzero(a[:i, c])
        if above.size:
            a[above, c:] = (a[above, c:] - np.outer(a[above, c], a[i, c:]) % p) % p
    return a, pivots


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Basis of {v : a v = 0} as the rows of the returned matrix."""
    ncols = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(ncols, dtype=dtype_for(p))
    red, pivots = rref(a, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=dtype_for(p))
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = (-red[row, f]) % p
    return basis


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.dtype == object or b.dtype == object or (p - 1) ** 2 * a.shape[-1] >= (1 << 62):
        return (a.astype(object) @ b.astype(object)) % p
    return (a @ b) % p
