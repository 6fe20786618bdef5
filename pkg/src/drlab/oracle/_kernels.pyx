# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled row reduction over GF(p) on dense int64 matrices."""

import numpy as np

ctypedef long long i64


cdef i64 _inverse(i64 a, i64 p):
    cdef i64 r0 = p, r1 = a % p, s0 = 0, s1 = 1, q, tmp
    while r1:
        q = r0 // r1
        tmp = r0 - q * r1
        r0 = r1
        r1 = tmp
        tmp = s0 - q * s1
        s0 = s1
        s1 = tmp
    s0 %= p
    if s0 < 0:
        s0 += p
    return s0


def echelon_mod_p(i64[:, ::1] A, i64 p, bint reduced=True):
    """Row-reduce ``A`` in place; entries must already lie in ``[0, p)``.

    Returns ``(rank, pivot_columns)``.  With ``reduced`` the result is the
    reduced row echelon form, otherwise only rows below each pivot are cleared.
    """
    cdef Py_ssize_t nrows = A.shape[0], ncols = A.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, k, piv, nnz, start
    cdef i64 f, inv, tmp
    cdef i64[::1] nz = np.empty(max(ncols, 1), dtype=np.int64)
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if A[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, ncols):
                tmp = A[r, j]
                A[r, j] = A[piv, j]
                A[piv, j] = tmp
        inv = _inverse(A[r, c], p)
        nnz = 0
        for j in range(c, ncols):
            if A[r, j] != 0:
                A[r, j] = (A[r, j] * inv) % p
                nz[nnz] = j
                nnz += 1
        start = 0 if reduced else r + 1
        for i in range(start, nrows):
            if i == r:
                continue
            f = A[i, c]
            if f == 0:
                continue
            f = p - f
            for k in range(nnz):
                j = nz[k]
                A[i, j] = (A[i, j] + f * A[r, j]) % p
        pivots.append(c)
        r += 1
    return r, pivots
