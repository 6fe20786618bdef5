"""Graded pieces of ideals in ``S = k[X]`` and generator counts in ``R = S/I_t``.

Everything here is brute force: a degree-``d`` piece of an ideal is spanned
by monomial multiples of its homogeneous generators, and its dimension is
the rank of their coefficient vectors.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, Iterable, List, Sequence

import numpy as np

from ..errors import FieldWarning, InhomogeneousError, RangeError, ResourceError
from ..params import RingParams
from .fields import FieldSpec
from .linalg import densify, echelon_mod_p, echelon_rational
from .polys import (
    MAX_COLUMNS,
    GenericMatrixSpec,
    Poly,
    check_columns,
    degree,
    minors,
    mono_mul,
    monomial_index,
    n_monomials,
    poly_prod,
)

SparseRow = Dict[int, int]

# dense int64 matrices beyond this many entries (~1.6 GB) are refused
MAX_DENSE_ENTRIES = 200_000_000


@dataclass(frozen=True)
class IdealPowerSpec:
    """The ideal ``M^b Q^a`` where ``Q`` is generated by the ``(t-1)``-minors
    of the first ``t - 1`` columns."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 0 or self.b < 0:
            raise RangeError(f"powers must be non-negative, got a={self.a}, b={self.b}")

    def degree(self, t: int) -> int:
        return self.a * (t - 1) + self.b


@dataclass(frozen=True, eq=False)
class GradedSubspace:
    """A subspace of ``S_d`` in reduced row echelon form.

    Columns index the degree-``d`` monomials in the order of
    :func:`~drlab.oracle.polys.monomials`.
    """

    degree: int
    nvars: int
    field: FieldSpec
    matrix: np.ndarray
    pivots: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.pivots)


def _infer_nvars(gens: Sequence[Poly]) -> int:
    return 1 + max((v for g in gens for mono in g for v in mono), default=-1)


def multiples(
    gens: Iterable[Poly], nvars: int, d: int, max_columns: int = MAX_COLUMNS
) -> List[SparseRow]:
    """Coefficient rows of ``u * g`` for every monomial ``u`` with ``deg(u g) = d``."""
    check_columns(nvars, d, max_columns)
    index = monomial_index(nvars, d)
    rows: List[SparseRow] = []
    for g in gens:
        if not g:
            continue
        e = degree(g)
        if e > d:
            continue
        terms = list(g.items())
        for u in combinations_with_replacement(range(nvars), d - e):
            rows.append({index[mono_mul(u, mono)]: c for mono, c in terms})
    return rows


def _dense(rows: Sequence[SparseRow], ncols: int, p: int) -> np.ndarray:
    if len(rows) * ncols > MAX_DENSE_ENTRIES:
        raise ResourceError(
            f"{len(rows)}x{ncols} coefficient matrix exceeds {MAX_DENSE_ENTRIES} entries"
        )
    A = np.zeros((len(rows), ncols), dtype=np.int64)
    for i, row in enumerate(rows):
        for c, x in row.items():
            A[i, c] = x % p
    return A


def _rank(rows: Sequence[SparseRow], ncols: int, field: FieldSpec) -> int:
    if not rows:
        return 0
    if field.is_rational:
        return len(echelon_rational(rows, reduced=False)[1])
    return echelon_mod_p(_dense(rows, ncols, field.p), field.p, reduced=False)[0]


def _ranks_stacked(
    first: Sequence[SparseRow], second: Sequence[SparseRow], ncols: int, field: FieldSpec
) -> tuple[int, int]:
    """``(rank(first), rank(first + second))``."""
    if field.is_rational:
        basis, pivots = echelon_rational(first, reduced=False)
        r1 = len(pivots)
        _, pivots = echelon_rational(list(basis) + list(second), reduced=False)
        return r1, len(pivots)
    A = _dense(first, ncols, field.p)
    r1 = echelon_mod_p(A, field.p, reduced=False)[0] if len(first) else 0
    B = np.ascontiguousarray(np.vstack([A[:r1], _dense(second, ncols, field.p)]))
    r2 = echelon_mod_p(B, field.p, reduced=False)[0] if B.shape[0] else 0
    return r1, r2


def graded_piece(
    gens: Sequence[Poly],
    d: int,
    field: FieldSpec | None = None,
    nvars: int | None = None,
    max_columns: int = MAX_COLUMNS,
) -> GradedSubspace:
    """Degree-``d`` piece of the ideal generated by ``gens``, fully reduced."""
    field = field or FieldSpec.default()
    if d < 0:
        raise RangeError(f"degree must be non-negative, got {d}")
    nvars = _infer_nvars(gens) if nvars is None else nvars
    ncols = check_columns(nvars, d, max_columns)
    rows = multiples(gens, nvars, d, max_columns)
    if field.is_rational:
        basis, pivots = echelon_rational(rows, reduced=True)
        matrix = densify(basis, ncols)
    else:
        A = _dense(rows, ncols, field.p)
        r, pivots = echelon_mod_p(A, field.p, reduced=True) if rows else (0, [])
        matrix = A[:r].copy()
    return GradedSubspace(d, nvars, field, matrix, tuple(pivots))


def graded_dim(
    gens: Sequence[Poly],
    d: int,
    field: FieldSpec | None = None,
    nvars: int | None = None,
    max_columns: int = MAX_COLUMNS,
) -> int:
    """``dim_k`` of the degree-``d`` piece of the ideal generated by ``gens``."""
    field = field or FieldSpec.default()
    if d < 0:
        raise RangeError(f"degree must be non-negative, got {d}")
    for g in gens:
        if g:
            degree(g)
    nvars = _infer_nvars(gens) if nvars is None else nvars
    ncols = check_columns(nvars, d, max_columns)
    return _rank(multiples(gens, nvars, d, max_columns), ncols, field)


def _ring_setup(p: RingParams, field: FieldSpec) -> tuple[GenericMatrixSpec, list[Poly]]:
    field.require_large(p.m, p.n, p.t)
    X = GenericMatrixSpec(p.m, p.n)
    return X, minors(X, p.t)


def hilbert_function(
    p: RingParams, dmax: int, field: FieldSpec | None = None, max_columns: int = MAX_COLUMNS
) -> list[int]:
    """``[dim_k R_d for d in 0..dmax]``."""
    field = field or FieldSpec.default()
    if dmax < 0:
        raise RangeError(f"dmax must be non-negative, got {dmax}")
    X, gens = _ring_setup(p, field)
    return [
        n_monomials(X.nvars, d) - graded_dim(gens, d, field, X.nvars, max_columns)
        for d in range(dmax + 1)
    ]


def h_from_hilbert(hf: list[int], dim: int) -> list[int]:
    """Truncated numerator of the Hilbert series, ``HS(z) * (1 - z)^dim``.

    Only ``len(hf)`` coefficients are determined; trailing zeros suggest,
    but do not prove, that the numerator has terminated.
    """
    return [
        sum((-1) ** j * comb(dim, j) * hf[i - j] for j in range(min(i, dim) + 1))
        for i in range(len(hf))
    ]


def h_vector(p: RingParams, dmax: int, field: FieldSpec | None = None) -> list[int]:
    from ..params import krull_dim

    return h_from_hilbert(hilbert_function(p, dmax, field), krull_dim(p))


def q_generators(p: RingParams) -> list[Poly]:
    """The ``(t-1)``-minors of the first ``t - 1`` columns."""
    X = GenericMatrixSpec(p.m, p.n)
    return minors(X, p.t - 1, col_subset=range(p.t - 1))


def ideal_power_generators(p: RingParams, a: int) -> list[Poly]:
    """All products of ``a`` generators of ``Q`` (with repetition)."""
    q = q_generators(p)
    return [poly_prod(q[i] for i in combo) for combo in combinations_with_replacement(range(len(q)), a)]


def _mu(p: RingParams, spec: IdealPowerSpec, field: FieldSpec, max_columns: int) -> int:
    X, minor_gens = _ring_setup(p, field)
    e = spec.degree(p.t)
    ncols = check_columns(X.nvars, e, max_columns)
    i_rows = multiples(minor_gens, X.nvars, e, max_columns)
    j_rows = multiples(ideal_power_generators(p, spec.a), X.nvars, e, max_columns)
    r_i, r_ij = _ranks_stacked(i_rows, j_rows, ncols, field)
    return r_ij - r_i


def mu_graded_ideal(
    p: RingParams,
    spec: IdealPowerSpec,
    field: FieldSpec | None = None,
    cross_check: bool = False,
    max_columns: int = MAX_COLUMNS,
) -> int:
    """Minimal generator count of the image of ``M^b Q^a`` in ``R``.

    The ideal is generated in the single degree ``e = a(t-1) + b``, so its
    generator count is ``dim (M^b Q^a + I_t)_e - dim (I_t)_e``.  With
    ``cross_check`` a prime-field result is recomputed over a second prime
    and a :class:`FieldWarning` is issued on disagreement.
    """
    field = field or FieldSpec.default()
    value = _mu(p, spec, field, max_columns)
    if cross_check and not field.is_rational:
        other = field.companion()
        again = _mu(p, spec, other, max_columns)
        if again != value:
            warnings.warn(
                f"mu(M^{spec.b} Q^{spec.a}) for {p}: {value} over {field}, {again} over {other}",
                FieldWarning,
                stacklevel=2,
            )
    return value


def oracle_type(p: RingParams, field: FieldSpec | None = None, **kw) -> int:
    """Cohen-Macaulay type as the generator count of ``Q^(n-m)``."""
    return mu_graded_ideal(p, IdealPowerSpec(p.n - p.m, 0), field, **kw)


def oracle_mu_mk(p: RingParams, field: FieldSpec | None = None, **kw) -> int:
    """Generator count of ``M K_R`` with ``K_R = Q^(n-m)`` up to shift."""
    return mu_graded_ideal(p, IdealPowerSpec(p.n - p.m, 1), field, **kw)


def presentation_mu(
    columns: Sequence[Sequence[Poly]],
    b: int,
    numvars: int,
    field: FieldSpec | None = None,
) -> int:
    """``mu_S(M K)`` for ``K = coker(S(-1)^a -> S^b)`` given by linear columns.

    Equals ``numvars * b - dim V`` where ``V`` is spanned by the coefficient
    vectors of the ``a`` columns in ``(S_1)^b``.
    """
    field = field or FieldSpec.default()
    rows: List[SparseRow] = []
    for col in columns:
        if len(col) != b:
            raise RangeError(f"column has {len(col)} entries, expected {b}")
        row: SparseRow = {}
        for pos, form in enumerate(col):
            for mono, c in form.items():
                if len(mono) != 1 or not 0 <= mono[0] < numvars:
                    raise InhomogeneousError(f"entry {form} is not a linear form in {numvars} variables")
                row[pos * numvars + mono[0]] = c
        rows.append(row)
    return numvars * b - _rank(rows, numvars * b, field)


def eagon_northcott_columns(m: int) -> list[list[Poly]]:
    """Columns of the generic ``m x (m+1)`` matrix, presenting the canonical
    module of its maximal-minor ring."""
    X = GenericMatrixSpec(m, m + 1)
    return [[X.entry(i, j) for i in range(m)] for j in range(m + 1)]
