"""Exact linear algebra over a prime field F_p.

Matrices are plain ``numpy`` integer arrays holding canonical representatives
``0..p-1``.  Every routine reduces its inputs first, so callers may pass
nested lists or arrays with arbitrary integer entries.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

DTYPE = np.int64


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def as_mat(m, p: int, shape: tuple[int, int] | None = None) -> np.ndarray:
    """Coerce ``m`` to a 2-D array reduced mod ``p``."""
    a = np.asarray(m, dtype=DTYPE)
    if shape is not None:
        a = a.reshape(shape)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {a.shape}")
    return a % p


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=DTYPE)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=DTYPE)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (a @ b) % p


def rref(m, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns.

    First-nonzero pivoting; the result is unique so repeated calls are
    bit-identical.
    """
    a = as_mat(m, p).copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = pow(int(a[r, c]), -1, p)
        if inv != 1:
            a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m, p: int) -> int:
    a = as_mat(m, p)
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def kernel_basis(m, p: int) -> np.ndarray:
    """Columns spanning the right null space of ``m``.

    The result has shape ``(cols, cols - rank)`` and satisfies ``m @ K = 0``.
    """
    a = as_mat(m, p)
    rows, cols = a.shape
    if rows == 0:
        return identity(cols)
    red, pivots = rref(a, p)
    piv = set(pivots)
    free = [c for c in range(cols) if c not in piv]
    k = zeros(cols, len(free))
    for t, f in enumerate(free):
        k[f, t] = 1
        for i, c in enumerate(pivots):
            k[c, t] = (-red[i, f]) % p
    return k


def left_kernel_basis(m, p: int) -> np.ndarray:
    """Rows spanning the left null space: ``L @ m = 0``."""
    return kernel_basis(as_mat(m, p).T, p).T.copy()


def column_basis(m, p: int) -> np.ndarray:
    """A subset of the columns of ``m`` forming a basis of its column space."""
    a = as_mat(m, p)
    if a.size == 0:
        return zeros(a.shape[0], 0)
    _, pivots = rref(a, p)
    return a[:, pivots].copy()


def complement_basis(m, p: int) -> np.ndarray:
    """Standard basis vectors completing the column space of ``m`` to F_p^rows.

    Scans ``e_0, e_1, ...`` in order and keeps those that raise the rank, so
    the choice is deterministic.
    """
    a = as_mat(m, p)
    n = a.shape[0]
    # pivots of [m | I] beyond the m-block pick exactly the completing e_i
    _, pivots = rref(np.hstack([a, identity(n)]), p)
    picked = [c - a.shape[1] for c in pivots if c >= a.shape[1]]
    return identity(n)[:, picked].copy()


def solve(a, b, p: int) -> np.ndarray | None:
    """Return some ``x`` with ``a @ x = b`` or ``None`` when inconsistent."""
    a = as_mat(a, p)
    b = as_mat(b, p)
    if a.shape[0] != b.shape[0]:
        raise ValueError(f"row mismatch: a has {a.shape[0]} rows, b has {b.shape[0]}")
    n = a.shape[1]
    red, pivots = rref(np.hstack([a, b]), p)
    if any(c >= n for c in pivots):
        return None
    x = zeros(n, b.shape[1])
    for i, c in enumerate(pivots):
        x[c] = red[i, n:]
    return x


def inverse(m, p: int) -> np.ndarray:
    a = as_mat(m, p)
    if a.shape[0] != a.shape[1]:
        raise ValueError("inverse of a non-square matrix")
    x = solve(a, identity(a.shape[0]), p)
    if x is None or rank(a, p) != a.shape[0]:
        raise ValueError("matrix is singular")
    return x


def projective_points(h: int, p: int):
    """Coefficient vectors of F_p^h up to nonzero scalars (first nonzero entry 1).

    Kernels, cokernels and images are invariant under rescaling a morphism, so
    iterating these instead of all ``p**h`` vectors loses nothing.
    """
    for lead in range(h):
        for rest in itertools.product(range(p), repeat=h - lead - 1):
            yield (0,) * lead + (1,) + rest


@lru_cache(maxsize=None)
def subspaces(d: int, p: int) -> tuple[np.ndarray, ...]:
    """Every subspace of F_p^d, each as a ``d x k`` matrix of basis columns.

    Subspaces are produced from their reduced row echelon forms, hence each
    appears exactly once.
    """
    out = []
    for k in range(d + 1):
        for piv in itertools.combinations(range(d), k):
            free = [(r, c) for r in range(k) for c in range(piv[r] + 1, d) if c not in piv]
            for vals in itertools.product(range(p), repeat=len(free)):
                e = zeros(k, d)
                for r, c in enumerate(piv):
                    e[r, c] = 1
                for (r, c), v in zip(free, vals):
                    e[r, c] = v
                basis = e.T.copy()
                basis.flags.writeable = False
                out.append(basis)
    return tuple(out)
