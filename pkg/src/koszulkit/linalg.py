"""Exact dense linear algebra over QQ and F_p.

Prime-field work goes through the modular kernels; rationals use Fraction
row reduction that skips zero entries (the matrices built here are sparse).
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import kernels
from .field import Field


def _echelon_qq(rows, sparse=False):
    """Sparse forward elimination; returns {pivot column: monic row dict}."""
    piv: dict = {}
    for row in rows:
        if sparse:
            r = {j: Fraction(v) for j, v in row.items() if v}
        else:
            r = {j: Fraction(v) for j, v in enumerate(row) if v}
        while r:
            c = min(r)
            p = piv.get(c)
            if p is None:
                inv = 1 / r[c]
                piv[c] = {j: v * inv for j, v in r.items()}
                break
            f = r[c]
            for j, v in p.items():
                w = r.get(j, 0) - f * v
                if w:
                    r[j] = w
                else:
                    r.pop(j, None)
    return piv


def _rref_qq(rows):
    rows = list(rows)
    nc = len(rows[0]) if rows else 0
    piv = _echelon_qq(rows)
    cols = sorted(piv)
    # back substitution, last pivot first
    for k in range(len(cols) - 1, -1, -1):
        pr = piv[cols[k]]
        for c in cols[:k]:
            r = piv[c]
            f = r.get(cols[k])
            if f:
                for j, v in pr.items():
                    w = r.get(j, 0) - f * v
                    if w:
                        r[j] = w
                    else:
                        r.pop(j, None)
    out = []
    for c in cols:
        dense = [Fraction(0)] * nc
        for j, v in piv[c].items():
            dense[j] = v
        out.append(dense)
    return out, cols


def rref(rows, F: Field):
    """Row-reduced echelon form: (nonzero rows, pivot columns)."""
    rows = list(rows)
    if not rows or not len(rows[0]):
        return [], []
    if F.is_prime_field:
        A = np.array(rows, dtype=np.int64) % F.modulus
        A = np.ascontiguousarray(A)
        piv = kernels.rref_modp(A, F.modulus)
        return [[int(v) for v in A[i]] for i in range(len(piv))], piv
    return _rref_qq(rows)


def rref_array(A: np.ndarray, p: int):
    """In-place modular RREF of an int64 array, returns pivots (rank = len)."""
    A %= p
    return kernels.rref_modp(np.ascontiguousarray(A), p)


def rank(rows, F: Field) -> int:
    rows = list(rows)
    if not rows or not len(rows[0]):
        return 0
    if F.is_prime_field:
        A = np.ascontiguousarray(np.array(rows, dtype=np.int64) % F.modulus)
        return len(kernels.rref_modp(A, F.modulus))
    return len(_echelon_qq(rows))


def sparse_rank(rows, F: Field) -> int:
    """Rank of rows given as {column: value} dicts."""
    if not F.is_prime_field:
        return len(_echelon_qq(rows, sparse=True))
    p = F.modulus
    piv: dict = {}
    for row in rows:
        r = {j: v % p for j, v in row.items() if v % p}
        while r:
            c = min(r)
            q = piv.get(c)
            if q is None:
                inv = pow(r[c], -1, p)
                piv[c] = {j: v * inv % p for j, v in r.items()}
                break
            f = r[c]
            for j, v in q.items():
                w = (r.get(j, 0) - f * v) % p
                if w:
                    r[j] = w
                else:
                    r.pop(j, None)
    return len(piv)


def nullspace(rows, ncols: int, F: Field) -> list[list]:
    """Basis of {v : A v = 0}; one vector per free column, free entry set to one."""
    R, piv = rref(rows, F) if rows else ([], [])
    pivset = set(piv)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [F.zero] * ncols
        v[free] = F.one
        for i, c in enumerate(piv):
            v[c] = F.reduce(-R[i][free])
        basis.append(v)
    return basis


def solve(A, b, F: Field):
    """One solution x of A x = b (free variables zero), or None."""
    ncols = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    if not aug:
        return [F.zero] * ncols
    R, piv = rref(aug, F)
    if piv and piv[-1] == ncols:
        return None
    x = [F.zero] * ncols
    for i, c in enumerate(piv):
        x[c] = F(R[i][ncols])
    return x


def inverse(m, F: Field):
    n = len(m)
    aug = [list(row) + [F.one if i == j else F.zero for j in range(n)] for i, row in enumerate(m)]
    R, piv = rref(aug, F)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ValueError("singular matrix")
    return [[F(v) for v in R[i][n:]] for i in range(n)]


def in_span(basis_rref, pivots, v, F: Field) -> bool:
    """Whether ``v`` lies in the row space of an RREF basis."""
    v = list(v)
    for row, c in zip(basis_rref, pivots):
        f = v[c]
        if f:
            v = [F.reduce(a - f * b) for a, b in zip(v, row)]
    return not any(v)


def reduce_against(basis_rref, pivots, v, F: Field):
    v = list(v)
    for row, c in zip(basis_rref, pivots):
        f = v[c]
        if f:
            v = [F.reduce(a - f * b) for a, b in zip(v, row)]
    return v
