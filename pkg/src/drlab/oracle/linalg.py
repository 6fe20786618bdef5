"""Exact row reduction over GF(p) and QQ.

The GF(p) path uses the compiled kernel when it was built and falls back to
a numpy implementation otherwise; set ``DRLAB_PURE=1`` to force the fallback.
The QQ path is a sparse elimination over :class:`fractions.Fraction`.
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Dict, List, Sequence

import numpy as np

from . import _fallback

try:
    from . import _kernels as _native
except ImportError:  # extension not built
    _native = None

if os.environ.get("DRLAB_PURE", "").strip() not in ("", "0"):
    _native = None

BACKEND = "cython" if _native is not None else "numpy"

SparseRow = Dict[int, int]


def available_backends() -> list[str]:
    return ["cython", "numpy"] if _native is not None else ["numpy"]


def echelon_mod_p(
    A: np.ndarray, p: int, reduced: bool = True, backend: str | None = None
) -> tuple[int, list[int]]:
    """Row-reduce the int64 matrix ``A`` over GF(p) in place.

    Entries are first reduced into ``[0, p)``.  Returns ``(rank, pivots)``.
    """
    if A.dtype != np.int64 or not A.flags.c_contiguous:
        raise TypeError("expected a C-contiguous int64 matrix")
    np.remainder(A, p, out=A)
    backend = backend or BACKEND
    if backend == "cython":
        if _native is None:
            raise RuntimeError("compiled kernel not available")
        return _native.echelon_mod_p(A, p, reduced)
    if backend == "numpy":
        return _fallback.echelon_mod_p(A, p, reduced)
    raise ValueError(f"unknown backend {backend!r}")


def rank_mod_p(A: np.ndarray, p: int, backend: str | None = None) -> int:
    return echelon_mod_p(np.ascontiguousarray(A, dtype=np.int64).copy(), p, False, backend)[0]


def echelon_rational(
    rows: Sequence[SparseRow], reduced: bool = True
) -> tuple[list[Dict[int, Fraction]], list[int]]:
    """Sparse echelon form over QQ.

    Rows are inserted one at a time and reduced against the current basis;
    the basis is keyed by pivot column with a leading coefficient of 1.
    """
    basis: Dict[int, Dict[int, Fraction]] = {}
    for row in rows:
        v = {c: Fraction(x) for c, x in row.items() if x}
        while v:
            c = min(v)
            b = basis.get(c)
            if b is None:
                inv = 1 / v[c]
                basis[c] = {k: x * inv for k, x in v.items()}
                break
            f = v[c]
            for k, x in b.items():
                nv = v.get(k, 0) - f * x
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
    pivots = sorted(basis)
    if reduced:
        # clear entries above each pivot, last pivot first
        for idx in range(len(pivots) - 1, -1, -1):
            c = pivots[idx]
            b = basis[c]
            for other in pivots[:idx]:
                row = basis[other]
                f = row.get(c)
                if not f:
                    continue
                for k, x in b.items():
                    nv = row.get(k, 0) - f * x
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
    return [basis[c] for c in pivots], pivots


def rank_rational(rows: Sequence[SparseRow]) -> int:
    return len(echelon_rational(rows, reduced=False)[1])


def densify(rows: List[Dict[int, Fraction]], ncols: int) -> np.ndarray:
    out = np.full((len(rows), ncols), Fraction(0), dtype=object)
    for i, row in enumerate(rows):
        for c, x in row.items():
            out[i, c] = x
    return out
