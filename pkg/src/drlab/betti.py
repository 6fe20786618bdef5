"""Ranks of the tableau resolution and the closed forms built on them.

Box-level functions take :class:`~drlab.tableaux.BoxParams` (``M >= N``);
ring-level functions take :class:`~drlab.params.RingParams` (``m <= n``) and
translate through :func:`~drlab.params.reduced_shape` only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, prod

from .errors import ParameterError, RangeError
from .params import RingParams, krull_dim, reduced_shape
from .tableaux import BoxParams, _boerner, _box_partitions, _shape_rows


@dataclass(frozen=True)
class BettiTable:
    box: BoxParams
    ranks: tuple[int, ...]

    @property
    def alternating_sum(self) -> int:
        return sum(r if k % 2 == 0 else -r for k, r in enumerate(self.ranks))

    def __getitem__(self, k: int) -> int:
        return self.ranks[k]

    def __len__(self) -> int:
        return len(self.ranks)


@dataclass(frozen=True)
class AGReport:
    """Outcome of the almost-Gorenstein necessary condition.

    ``mu_mk`` is exact when ``exact`` is set, otherwise it is the lower bound
    obtained from the resolution.
    """

    mu_mk: int
    upper_bound: int
    cm_type: int
    passes: bool
    exact: bool


def _ranks_of(parts: tuple[int, ...], box: BoxParams) -> int:
    f_rows, g_rows, _ = _shape_rows(parts, box.M, box.N, box.t)
    rf, rg = box.rank_f, box.rank_g
    a = _boerner(f_rows + (0,) * (rf - len(f_rows)), rf) if len(f_rows) <= rf else 0
    if not a:
        return 0
    b = _boerner(g_rows + (0,) * (rg - len(g_rows)), rg) if len(g_rows) <= rg else 0
    return a * b


def rank_c(k: int, box: BoxParams) -> int:
    """Rank of the ``k``-th module of the resolution, summed over partitions."""
    if k < 0 or k > box.length:
        raise RangeError(f"k={k} outside [0, {box.length}]")
    return sum(_ranks_of(parts, box) for parts in _box_partitions(k, box.N, box.M))


def betti_table(box: BoxParams) -> BettiTable:
    return BettiTable(box, tuple(rank_c(k, box) for k in range(box.length + 1)))


def _fact_range(lo: int, hi: int) -> int:
    """``lo! * (lo+1)! * ... * hi!``; 1 when the range is empty."""
    return prod((factorial(k) for k in range(lo, hi + 1)), start=1)


def _exact(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num}/{den} is not an integer")
    return q


def type_closed_form(box: BoxParams) -> int:
    """Closed form for the last rank ``C_{MN}`` (the Cohen-Macaulay type)."""
    M, N, t = box.M, box.N, box.t
    num = prod(
        (t + i + j for j in range(M - N) for i in range(N)), start=1
    ) * _fact_range(1, N - 1)
    return _exact(num, _fact_range(M - N, M - 1))


def penult_closed_form(box: BoxParams) -> int:
    """Closed form for ``C_{MN-1}``; requires ``M > N``."""
    M, N, t = box.M, box.N, box.t
    if M == N:
        raise ParameterError("penultimate closed form needs M != N")
    num = (
        prod((t + i + j for j in range(M - N) for i in range(1, N)), start=1)
        * prod(range(t, t + M - N - 1), start=1)
        * (t + M - 1)
        * _fact_range(1, N - 2)
        * factorial(N)
    )
    den = factorial(M - N - 1) * _fact_range(M - N + 1, M - 1)
    return _exact(num, den)


def box_of(p: RingParams) -> BoxParams:
    M, N = reduced_shape(p)
    return BoxParams(M, N, p.t)


def alpha(p: RingParams) -> Fraction:
    t, m, n = p.t, p.m, p.n
    if m == n:
        raise ParameterError("alpha is only defined for m < n")
    num = (
        prod((t + i + j for j in range(n - m) for i in range(1, m - t + 1)), start=1)
        * prod(range(t, t + n - m - 1), start=1)
        * _fact_range(1, m - t)
    )
    den = factorial(n - m - 1) * _fact_range(n - m + 1, n - t)
    return Fraction(num, den)


def cm_type(p: RingParams) -> int:
    return type_closed_form(box_of(p))


def _check_t2(m: int, n: int) -> None:
    if not 2 <= m <= n:
        raise ParameterError(f"need 2 <= m <= n, got m={m}, n={n}")


def mu_mq_pow_t2(m: int, n: int, ell: int) -> int:
    """Generator count of ``M Q^ell`` for ``t = 2``."""
    _check_t2(m, n)
    if ell < 0:
        raise ParameterError(f"power must be non-negative, got {ell}")
    return comb(m + ell, ell + 1) * n


def mu_mk_t2(m: int, n: int) -> int:
    _check_t2(m, n)
    return comb(n, n - m + 1) * n


def mu_mk_maximal_minors(m: int) -> int:
    """Generator count of ``M K_R`` for maximal minors of an ``m x (m+1)`` matrix."""
    if m < 2:
        raise ParameterError(f"need m >= 2, got {m}")
    return (m * m - 1) * (m + 1)


def mu_mk_lower_bound(p: RingParams) -> int:
    if p.m == p.n:
        raise ParameterError("lower bound is stated for m < n")
    return p.m * p.n * cm_type(p) - penult_closed_form(box_of(p))


def binomial_inequality(m: int, ell: int) -> tuple[int, int, bool]:
    """Both sides of the strict inequality behind the ``t = 2`` case; holds for ``m >= 3``."""
    lhs = (m * m - 2 * m + ell + 2) * comb(m + ell - 1, ell)
    rhs = (ell + 1) * (m * m + (ell - 2) * m - (ell - 2))
    return lhs, rhs, lhs > rhs


def ag_necessary_condition(p: RingParams) -> AGReport:
    """Compare ``mu(M K_R)`` against ``mn + (d - 1)(r - 1)``.

    An almost Gorenstein ring must satisfy ``mu <= bound``.  For ``t = 2`` the
    exact generator count is used; otherwise the resolution lower bound.
    """
    r = cm_type(p)
    mn = p.m * p.n
    if p.m == p.n:
        # canonical module is principal, so mu(M K) = mu(M) = mn
        return AGReport(mn, mn, r, True, True)
    upper = mn + (krull_dim(p) - 1) * (r - 1)
    if p.t == 2:
        mu, exact = mu_mk_t2(p.m, p.n), True
    else:
        mu, exact = mu_mk_lower_bound(p), False
    return AGReport(mu, upper, r, mu <= upper, exact)
