"""Dense exact linear algebra over a prime field F_p, on int64 numpy arrays.

All matrices hold entries in 0..p-1.  Entry growth inside a single
matmul/convolution is at most n*(p-1)^2, far below int64 range for the
desk-scale dimensions used here, so one reduction per product is exact.
"""

from __future__ import annotations

import numpy as np


def zeros(shape) -> np.ndarray:
    return np.zeros(shape, dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (a @ b) % p


def matpow(a: np.ndarray, k: int, p: int) -> np.ndarray:
    n = a.shape[0]
    out = np.eye(n, dtype=np.int64)
    base = a % p
    while k:
        if k & 1:
            out = (out @ base) % p
        base = (base @ base) % p
        k >>= 1
    return out


def polymul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Product of coefficient vectors (low degree first), reduced mod p."""
    if len(a) == 0 or len(b) == 0:
        return zeros(0)
    return np.convolve(a, b) % p


def _inv_mod(x: int, p: int) -> int:
    return pow(int(x), p - 2, p)


def rref(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p; returns (rref matrix, pivot columns)."""
    a = (m % p).astype(np.int64).copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = (a[r] * _inv_mod(a[r, c], p)) % p
        other = np.nonzero(a[:, c])[0]
        other = other[other != r]
        if len(other):
            a[other] = (a[other] - np.outer(a[other, c], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def nullspace(m: np.ndarray, p: int) -> np.ndarray:
    """Basis of the right null space mod p, one vector per row (rref-canonical)."""
    rows, cols = m.shape
    if rows == 0:
        return np.eye(cols, dtype=np.int64)
    r, pivots = rref(m, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = zeros((len(free), cols))
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-r[i, fc]) % p
    return basis


def solve(m: np.ndarray, rhs: np.ndarray, p: int) -> np.ndarray | None:
    """One solution of m @ x = rhs mod p, or None if inconsistent.

    rhs may be a vector or a matrix of stacked column right-hand sides.
    """
    vec = rhs.ndim == 1
    b = rhs.reshape(-1, 1) if vec else rhs
    aug = np.concatenate([m % p, b % p], axis=1)
    r, pivots = rref(aug, p)
    cols = m.shape[1]
    if any(c >= cols for c in pivots):
        return None
    x = zeros((cols, b.shape[1]))
    for i, pc in enumerate(pivots):
        x[pc] = r[i, cols:]
    return x[:, 0] if vec else x


def rank(m: np.ndarray, p: int) -> int:
    if m.size == 0:
        return 0
    return len(rref(m, p)[1])


def in_rowspace(basis_rref: np.ndarray, pivots: list[int], v: np.ndarray, p: int) -> bool:
    """Membership of v in the row space given by an rref basis with pivot list."""
    w = v % p
    for i, pc in enumerate(pivots):
        if w[pc]:
            w = (w - w[pc] * basis_rref[i]) % p
    return not w.any()


class RowSpace:
    """Incrementally maintained row space mod p (rref form)."""

    def __init__(self, dim: int, p: int):
        self.p = p
        self.dim = dim
        self.basis = zeros((0, dim))
        self.pivots: list[int] = []

    def contains(self, v: np.ndarray) -> bool:
        return in_rowspace(self.basis, self.pivots, v, self.p)

    def add(self, v: np.ndarray) -> bool:
        """Insert v; returns True if the space grew."""
        p = self.p
        w = v % p
        for i, pc in enumerate(self.pivots):
            if w[pc]:
                w = (w - w[pc] * self.basis[i]) % p
        nz = np.nonzero(w)[0]
        if len(nz) == 0:
            return False
        c = int(nz[0])
        w = (w * _inv_mod(w[c], p)) % p
        if len(self.basis):
            col = self.basis[:, c].copy()
            if col.any():
                self.basis = (self.basis - np.outer(col, w)) % p
        at = sum(1 for pc in self.pivots if pc < c)
        self.basis = np.insert(self.basis, at, w, axis=0)
        self.pivots.insert(at, c)
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)
