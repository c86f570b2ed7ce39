"""Uncompiled reference versions of the modular kernels (numpy-vectorised)."""

from __future__ import annotations

import numpy as np


def rref_modp(A: np.ndarray, p: int) -> list[int]:
    """Reduce int64 matrix ``A`` (entries in [0, p)) to RREF in place; return pivot columns."""
    nr, nc = A.shape
    pivots = []
    r = 0
    for c in range(nc):
        if r >= nr:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        sel = r + int(nz[0])
        if sel != r:
            A[[r, sel]] = A[[sel, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r, c:] = A[r, c:] * inv % p
        col = A[:, c].copy()
        col[r] = 0
        rows = np.flatnonzero(col)
        if rows.size:
            # products stay below p^2 < 2^62
            A[rows, c:] = (A[rows, c:] - np.outer(col[rows], A[r, c:])) % p
        pivots.append(c)
        r += 1
    return pivots


def projective_points(n: int, p: int):
    """Points of P^{n-1}(F_p), first nonzero coordinate one, later coordinates in base p."""
    for lead in range(n):
        tail = n - 1 - lead
        for k in range(p ** tail):
            x = [0] * n
            x[lead] = 1
            v = k
            for pos in range(n - 1, lead, -1):
                x[pos] = v % p
                v //= p
            yield x


def scan_multiples(B: np.ndarray, pivots: list, table: np.ndarray, p: int) -> np.ndarray:
    n = table.shape[0]
    N = B.shape[1]
    out = []
    for x in projective_points(n, p):
        W = np.zeros((n, N), dtype=np.int64)
        for j in range(n):
            for i in range(n):
                if x[i]:
                    W[j, table[i, j]] = (W[j, table[i, j]] + x[i]) % p
        for k, c in enumerate(pivots):
            f = W[:, c].copy()
            W = (W - np.outer(f, B[k])) % p
        rk = len(rref_modp(W, p))
        out.append(n - rk)
    return np.array(out, dtype=np.int64)


def min_rank_pencil(T: np.ndarray, p: int) -> int:
    m = T.shape[1]
    best = m
    for t in range(p + 1):
        u0, u1 = (0, 1) if t == 0 else (1, t - 1)
        W = (u0 * T[0] + u1 * T[1]) % p
        best = min(best, len(rref_modp(np.ascontiguousarray(W, dtype=np.int64), p)))
    return best
