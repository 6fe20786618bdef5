"""Ring parameters for generic determinantal rings and their basic invariants.

A ring is described by ``(t, m, n)``: ``R = k[X] / I_t(X)`` for an ``m x n``
matrix ``X`` of indeterminates, normalized so that ``m <= n``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import ParameterError


@dataclass(frozen=True, order=True)
class RingParams:
    """Validated ``(t, m, n)`` with ``2 <= t <= m <= n``."""

    t: int
    m: int
    n: int

    def __post_init__(self) -> None:
        for name in ("t", "m", "n"):
            if not isinstance(getattr(self, name), int) or isinstance(getattr(self, name), bool):
                raise ParameterError(f"{name} must be an integer, got {getattr(self, name)!r}")
        if self.t < 2:
            raise ParameterError(f"minor size t must be >= 2, got t={self.t}")
        if not self.t <= self.m <= self.n:
            raise ParameterError(
                f"need 2 <= t <= m <= n, got t={self.t}, m={self.m}, n={self.n}"
            )

    @property
    def ell(self) -> int:
        return self.n - self.m

    @property
    def s(self) -> int:
        return self.m - self.t

    @property
    def nvars(self) -> int:
        return self.m * self.n

    def __str__(self) -> str:
        return f"(t={self.t}, m={self.m}, n={self.n})"


class Reason(str, enum.Enum):
    EQUAL_SIDES = "EQUAL_SIDES"
    TWO_BY_TWO_CASE = "TWO_BY_TWO_CASE"
    NEITHER = "NEITHER"


@dataclass(frozen=True)
class Classification:
    gorenstein: bool
    almost_gorenstein: bool
    minimal_multiplicity: bool
    reason: Reason

    def describe(self) -> str:
        if self.gorenstein:
            return "Gorenstein (hence almost Gorenstein)"
        if self.almost_gorenstein:
            text = "almost Gorenstein (non-Gorenstein)"
            if self.minimal_multiplicity:
                text += ", minimal multiplicity"
            return text
        return "not almost Gorenstein"


def normalize(t: int, rows: int, cols: int) -> RingParams:
    """Build :class:`RingParams` from an arbitrary matrix shape.

    The matrix is transposed if needed so that ``m = min(rows, cols)``.
    """
    if t < 2:
        raise ParameterError(f"minor size t must be >= 2, got t={t}")
    if min(rows, cols) < t:
        raise ParameterError(
            f"t={t} exceeds the smaller side of a {rows}x{cols} matrix"
        )
    return RingParams(t, min(rows, cols), max(rows, cols))


def krull_dim(p: RingParams) -> int:
    return p.m * p.n - (p.m - p.t + 1) * (p.n - p.t + 1)


def codim(p: RingParams) -> int:
    return (p.m - p.t + 1) * (p.n - p.t + 1)


def a_invariant(p: RingParams) -> int:
    """Degree of the h-polynomial minus the dimension: ``-(t-1) * n``.

    The longer side ``n`` enters; with ``m`` instead the criterion
    ``a = 1 - dim  <=>  m = t = 2`` for ``m != n`` would fail.
    """
    return -(p.t - 1) * p.n


def classify(p: RingParams) -> Classification:
    """Gorenstein / almost-Gorenstein / minimal-multiplicity verdict.

    The graded and local notions agree for these rings, so one answer
    covers both.
    """
    if p.m == p.n:
        return Classification(True, True, False, Reason.EQUAL_SIDES)
    if p.m == p.t == 2:
        return Classification(False, True, True, Reason.TWO_BY_TWO_CASE)
    return Classification(False, False, False, Reason.NEITHER)


def reduced_shape(p: RingParams) -> tuple[int, int]:
    """Box parameters ``(M, N)`` of the tableau resolution, with ``M >= N >= 1``.

    The free modules of the resolution have ranks ``M + t - 1 = n`` and
    ``N + t - 1 = m``, and the resolution has length ``M * N``.
    """
    return p.n - p.t + 1, p.m - p.t + 1
