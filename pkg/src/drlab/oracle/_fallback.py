"""Numpy implementation of the GF(p) row reduction, used when the compiled
kernel is unavailable."""

from __future__ import annotations

import numpy as np


def echelon_mod_p(A: np.ndarray, p: int, reduced: bool = True) -> tuple[int, list[int]]:
    nrows, ncols = A.shape
    r = 0
    pivots: list[int] = []
    for c in range(ncols):
        if r == nrows:
            break
        nonzero = np.flatnonzero(A[r:, c])
        if nonzero.size == 0:
            continue
        piv = r + int(nonzero[0])
        if piv != r:
            A[[r, piv], c:] = A[[piv, r], c:]
        inv = pow(int(A[r, c]), -1, p)
        nz = c + np.flatnonzero(A[r, c:])
        A[r, nz] = (A[r, nz] * inv) % p
        lo = 0 if reduced else r + 1
        targets = lo + np.flatnonzero(A[lo:, c])
        targets = targets[targets != r]
        if targets.size:
            f = (p - A[targets, c])[:, None]
            A[np.ix_(targets, nz)] = (A[np.ix_(targets, nz)] + f * A[r, nz]) % p
        pivots.append(c)
        r += 1
    return r, pivots
