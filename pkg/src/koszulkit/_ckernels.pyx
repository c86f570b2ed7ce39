# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled modular linear-algebra kernels (see _pykernels for the reference versions)."""

import numpy as np
cimport numpy as cnp

ctypedef long long i64


cdef int _rref(i64[:, ::1] A, i64 p, int[::1] piv) nogil:
    cdef Py_ssize_t nr = A.shape[0], nc = A.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, sel
    cdef i64 inv, f, t, e, b, m
    for c in range(nc):
        if r >= nr:
            break
        sel = -1
        for i in range(r, nr):
            if A[i, c] != 0:
                sel = i
                break
        if sel < 0:
            continue
        if sel != r:
            for j in range(nc):
                t = A[r, j]
                A[r, j] = A[sel, j]
                A[sel, j] = t
        # modular inverse by exponentiation
        inv = 1
        b = A[r, c]
        e = p - 2
        while e > 0:
            if e & 1:
                inv = inv * b % p
            b = b * b % p
            e >>= 1
        for j in range(c, nc):
            A[r, j] = A[r, j] * inv % p
        for i in range(nr):
            if i != r:
                f = A[i, c]
                if f != 0:
                    for j in range(c, nc):
                        if A[r, j] != 0:
                            m = (A[i, j] - f * A[r, j]) % p
                            if m < 0:
                                m += p
                            A[i, j] = m
        piv[r] = <int>c
        r += 1
    return <int>r


def rref_modp(cnp.ndarray A, long long p):
    """Reduce int64 matrix ``A`` (entries in [0, p)) to RREF in place; return pivot columns."""
    cdef i64[:, ::1] view = A
    cdef int[::1] piv = np.zeros(max(1, min(A.shape[0], A.shape[1])), dtype=np.intc)
    cdef int r
    with nogil:
        r = _rref(view, p, piv)
    return [int(piv[k]) for k in range(r)]


def scan_multiples(cnp.ndarray B, list pivots, cnp.ndarray table, long long p):
    """For every projective point x of P^{n-1}(F_p), dim of span(B) ∩ x*S_1.

    ``B`` is an RREF basis (r x N) of a space of quadrics, ``table[i, j]`` the
    column of monomial x_i*x_j.  Points are enumerated with the first nonzero
    coordinate equal to one, later coordinates counting in base p.
    """
    cdef Py_ssize_t n = table.shape[0], N = B.shape[1], r = B.shape[0]
    cdef i64[:, ::1] Bv = B
    cdef i64[:, ::1] T = table
    cdef int[::1] pv = np.array(pivots if pivots else [0], dtype=np.intc)
    cdef Py_ssize_t npts = 0, lead, k, i, j, c
    cdef Py_ssize_t pw = 1
    for lead in range(n):
        npts += pw
        pw *= p
    out = np.zeros(npts, dtype=np.int64)
    cdef i64[::1] ov = out
    cdef i64[::1] x = np.zeros(n, dtype=np.int64)
    cdef i64[:, ::1] W = np.zeros((n, N), dtype=np.int64)
    cdef int[::1] wp = np.zeros(max(1, min(n, N)), dtype=np.intc)
    cdef Py_ssize_t idx = 0, pos
    cdef i64 f, m
    cdef int rk
    with nogil:
        for lead in range(n):
            for i in range(n):
                x[i] = 0
            x[lead] = 1
            while True:
                for j in range(n):
                    for c in range(N):
                        W[j, c] = 0
                    for i in range(n):
                        if x[i] != 0:
                            c = T[i, j]
                            W[j, c] = (W[j, c] + x[i]) % p
                    for k in range(r):
                        c = pv[k]
                        f = W[j, c]
                        if f != 0:
                            for i in range(N):
                                if Bv[k, i] != 0:
                                    m = (W[j, i] - f * Bv[k, i]) % p
                                    if m < 0:
                                        m += p
                                    W[j, i] = m
                rk = _rref(W, p, wp)
                ov[idx] = n - rk
                idx += 1
                # advance the counter on coordinates lead+1 .. n-1
                pos = n - 1
                while pos > lead:
                    x[pos] += 1
                    if x[pos] < p:
                        break
                    x[pos] = 0
                    pos -= 1
                if pos <= lead:
                    break
    return out


def min_rank_pencil(cnp.ndarray T, long long p):
    """Minimum over u in P^1(F_p) of rank(u0*T[0] + u1*T[1]) for T of shape (2, m, n)."""
    cdef Py_ssize_t m = T.shape[1], n = T.shape[2], a, b
    cdef i64[:, :, ::1] Tv = T
    cdef i64[:, ::1] W = np.zeros((m, n), dtype=np.int64)
    cdef int[::1] wp = np.zeros(max(1, min(m, n)), dtype=np.intc)
    cdef i64 u0, u1
    cdef int best = <int>m, rk
    cdef Py_ssize_t t
    with nogil:
        for t in range(p + 1):
            if t == 0:
                u0 = 0
                u1 = 1
            else:
                u0 = 1
                u1 = t - 1
            for a in range(m):
                for b in range(n):
                    W[a, b] = (u0 * Tv[0, a, b] + u1 * Tv[1, a, b]) % p
            rk = _rref(W, p, wp)
            if rk < best:
                best = rk
    return best
