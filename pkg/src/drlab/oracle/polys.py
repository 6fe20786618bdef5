"""Sparse integer polynomials over the variables of a generic matrix.

A monomial is a sorted tuple of variable indices (``x0**2 * x3`` is
``(0, 0, 3)``); a polynomial is a dict from monomials to nonzero integer
coefficients.  Degree-``d`` monomials are ordered by
``itertools.combinations_with_replacement``, i.e. lexicographically with
``x0 > x1 > ...``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations
from math import comb
from typing import Dict, Iterable, Sequence, Tuple

from ..errors import InhomogeneousError, RangeError, ResourceError

Monomial = Tuple[int, ...]
Poly = Dict[Monomial, int]

MAX_COLUMNS = 2_000_000


@dataclass(frozen=True)
class GenericMatrixSpec:
    """An ``rows x cols`` matrix whose entries are distinct degree-1 variables."""

    rows: int
    cols: int

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise RangeError(f"matrix must be at least 1x1, got {self.rows}x{self.cols}")

    @property
    def nvars(self) -> int:
        return self.rows * self.cols

    def var(self, i: int, j: int) -> int:
        """Index of the variable in row ``i``, column ``j`` (0-based)."""
        return i * self.cols + j

    def entry(self, i: int, j: int) -> Poly:
        return {(self.var(i, j),): 1}


def _sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])
    return -1 if inversions % 2 else 1


def determinant(spec: GenericMatrixSpec, rows: Sequence[int], cols: Sequence[int]) -> Poly:
    out: Poly = {}
    for perm in permutations(range(len(rows))):
        mono = tuple(sorted(spec.var(rows[k], cols[perm[k]]) for k in range(len(rows))))
        out[mono] = out.get(mono, 0) + _sign(perm)
    return {m: c for m, c in out.items() if c}


def minors(
    spec: GenericMatrixSpec,
    size: int,
    row_subset: Sequence[int] | None = None,
    col_subset: Sequence[int] | None = None,
) -> list[Poly]:
    """All ``size x size`` minors of the (sub)matrix, in lexicographic order of
    row then column subsets."""
    rows = list(range(spec.rows)) if row_subset is None else list(row_subset)
    cols = list(range(spec.cols)) if col_subset is None else list(col_subset)
    if any(not 0 <= i < spec.rows for i in rows) or any(not 0 <= j < spec.cols for j in cols):
        raise RangeError("row or column subset outside the matrix")
    if not 0 <= size <= min(len(rows), len(cols)):
        raise RangeError(f"minor size {size} exceeds a {len(rows)}x{len(cols)} (sub)matrix")
    return [
        determinant(spec, r, c)
        for r in combinations(rows, size)
        for c in combinations(cols, size)
    ]


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(sorted(a + b))


def poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = mono_mul(ma, mb)
            out[m] = out.get(m, 0) + ca * cb
    return {m: c for m, c in out.items() if c}


def poly_prod(polys: Iterable[Poly]) -> Poly:
    out: Poly = {(): 1}
    for p in polys:
        out = poly_mul(out, p)
    return out


def degree(p: Poly) -> int:
    """Degree of a nonzero homogeneous polynomial."""
    degs = {len(m) for m in p}
    if not degs:
        raise InhomogeneousError("the zero polynomial has no degree")
    if len(degs) > 1:
        raise InhomogeneousError(f"polynomial mixes degrees {sorted(degs)}")
    return degs.pop()


def n_monomials(nvars: int, d: int) -> int:
    if d < 0:
        return 0
    return comb(nvars + d - 1, d)


def check_columns(nvars: int, d: int, limit: int = MAX_COLUMNS) -> int:
    n = n_monomials(nvars, d)
    if n > limit:
        raise ResourceError(
            f"degree-{d} monomial basis in {nvars} variables has {n} columns (limit {limit})"
        )
    return n


def monomials(nvars: int, d: int) -> list[Monomial]:
    return list(combinations_with_replacement(range(nvars), d))


@lru_cache(maxsize=32)
def monomial_index(nvars: int, d: int) -> Dict[Monomial, int]:
    return {m: i for i, m in enumerate(combinations_with_replacement(range(nvars), d))}
