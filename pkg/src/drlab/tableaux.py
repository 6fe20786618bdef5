"""Partitions in a box, the tableau cell correspondence, and Schur module ranks.

Conventions follow the tableau description of the resolution: the box
``lambda(M, N)`` has ``N`` rows of ``M`` cells with ``M >= N``; cells are
``(row, col)`` pairs, both 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .errors import ParameterError, RangeError, ShapeError


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of non-negative integers.

    Trailing zeros are dropped on construction, so ``Partition((2, 0))``
    equals ``Partition((2,))``.
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(x) for x in self.parts)
        if any(x < 0 for x in parts):
            raise ShapeError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ShapeError(f"parts not weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of nonzero parts."""
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        # 0-based; parts beyond the stored length are zero
        return self.parts[i] if i < len(self.parts) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def padded(self, n: int) -> tuple[int, ...]:
        if n < len(self.parts):
            raise ShapeError(f"{self.parts} has more than {n} nonzero parts")
        return self.parts + (0,) * (n - len(self.parts))

    def conjugate(self) -> "Partition":
        return Partition(conjugate(self.parts))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class BoxParams:
    """Box ``lambda(M, N)`` together with the minor size ``t >= 1``."""

    M: int
    N: int
    t: int

    def __post_init__(self) -> None:
        if not (self.M >= self.N >= 1):
            raise ParameterError(f"need M >= N >= 1, got M={self.M}, N={self.N}")
        if self.t < 1:
            raise ParameterError(f"need t >= 1, got t={self.t}")

    @property
    def rank_f(self) -> int:
        return self.M + self.t - 1

    @property
    def rank_g(self) -> int:
        return self.N + self.t - 1

    @property
    def length(self) -> int:
        return self.M * self.N


class Cell(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class ShapePair:
    f_shape: Partition
    g_shape: Partition
    diagonal_count: int


def conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    if not parts or parts[0] == 0:
        return ()
    return tuple(sum(1 for x in parts if x > j) for j in range(parts[0]))


def _box_partitions(k: int, rows: int, width: int) -> Iterator[tuple[int, ...]]:
    # padded to exactly `rows` entries, lexicographically decreasing
    if rows == 0:
        if k == 0:
            yield ()
        return
    lo = -(-k // rows)
    for first in range(min(width, k), lo - 1, -1):
        for rest in _box_partitions(k - first, rows - 1, first):
            yield (first,) + rest


def partitions_in_box(k: int, N: int, M: int) -> list[Partition]:
    """Partitions of ``k`` with at most ``N`` parts, each at most ``M``."""
    if k < 0 or k > M * N:
        raise RangeError(f"k={k} outside [0, {M * N}]")
    return [Partition(p) for p in _box_partitions(k, N, M)]


def _check_box_cell(c: Cell, box: BoxParams) -> None:
    if not (1 <= c.row <= box.N and 1 <= c.col <= box.M):
        raise RangeError(f"cell {tuple(c)} outside lambda({box.M}, {box.N})")


def _image(i: int, j: int, offset: int, t: int) -> list[Cell]:
    d = j - i
    if d > offset:
        return [Cell(i, j)]
    if d == offset:
        return [Cell(i + h, j) for h in range(t)]
    return [Cell(i + t - 1, j)]


def cell_image(c: Cell, box: BoxParams) -> list[Cell]:
    """Cells of ``lambda(M, N + t - 1)`` attached to cell ``c`` of ``lambda(M, N)``.

    Cells right of the shifted diagonal ``j - i = M - N`` stay put, cells on
    it become a vertical strip of ``t`` cells, and cells left of it move down
    by ``t - 1`` rows.
    """
    c = Cell(*c)
    _check_box_cell(c, box)
    return _image(c.row, c.col, box.M - box.N, box.t)


def f_cells(lam: Partition, box: BoxParams) -> list[list[Cell]]:
    """Cells of the F-part of ``lam``, grouped by its columns.

    Column ``i`` holds the rightmost ``lam_i`` cells of row ``N - i + 1``.
    """
    parts = _fit(lam, box)
    return [
        [Cell(box.N - i, box.M - s) for s in range(parts[i])]
        for i in range(box.N)
        if parts[i] > 0
    ]


def _fit(lam: Partition, box: BoxParams) -> tuple[int, ...]:
    if lam.length > box.N or lam[0] > box.M:
        raise RangeError(f"partition {lam} does not fit in a {box.N}x{box.M} box")
    return lam.padded(box.N)


def _shape_rows(
    parts: tuple[int, ...], M: int, N: int, t: int
) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    offset = M - N
    used_per_row = [0] * (N + t)
    seen: set[tuple[int, int]] = set()
    col_lengths = []
    diagonal = 0
    for i in range(N):
        li = parts[i]
        if li == 0:
            break
        row = N - i
        count = 0
        for s in range(li):
            for cell in _image(row, M - s, offset, t):
                if cell in seen:
                    raise ShapeError(f"cell images overlap at {tuple(cell)}")
                seen.add(cell)
                used_per_row[cell.row] += 1
                count += 1
        # column i+1 picks up the vertical strip exactly when lam_{i+1} >= i+1
        on_diag = li >= i + 1
        diagonal += on_diag
        expected = li + (t - 1) * on_diag
        if count != expected:
            raise ShapeError(
                f"column {i + 1} of F-shape has {count} cells, closed form gives {expected}"
            )
        col_lengths.append(count)
    if any(a < b for a, b in zip(col_lengths, col_lengths[1:])):
        raise ShapeError(f"F-shape column lengths not decreasing: {col_lengths}")
    g_rows = tuple(M - used_per_row[r] for r in range(1, N + t))
    if any(a < b for a, b in zip(g_rows, g_rows[1:])):
        raise ShapeError(f"G-shape row counts not weakly decreasing: {g_rows}")
    return conjugate(col_lengths), g_rows, diagonal


def shapes(lam: Partition, box: BoxParams) -> ShapePair:
    """Derive the F- and G-shapes of ``lam`` as row-length partitions."""
    if not isinstance(lam, Partition):
        lam = Partition(tuple(lam))
    parts = _fit(lam, box)
    f_rows, g_rows, diagonal = _shape_rows(parts, box.M, box.N, box.t)
    return ShapePair(Partition(f_rows), Partition(g_rows), diagonal)


@lru_cache(maxsize=None)
def _vandermonde_superfactorial(r: int) -> int:
    out = 1
    for j in range(1, r):
        for i in range(j):
            out *= j - i
    return out


@lru_cache(maxsize=1 << 16)
def _boerner(parts: tuple[int, ...], r: int) -> int:
    ell = [parts[i] + r - 1 - i for i in range(r)]
    num = 1
    for i in range(r):
        li = ell[i]
        for j in range(i + 1, r):
            num *= li - ell[j]
    q, rem = divmod(num, _vandermonde_superfactorial(r))
    if rem:
        raise ShapeError(f"non-integral rank for {parts} in rank {r}")
    return q


def boerner_rank(lam: Partition | Sequence[int], r: int) -> int:
    """Rank of the Schur module of shape ``lam`` on a free module of rank ``r``.

    Computed as ``Delta(l_1..l_r) / Delta(r-1..0)`` with ``l_i = lam_i + r - i``.
    Returns 0 when ``lam`` has more than ``r`` nonzero parts.
    """
    if not isinstance(lam, Partition):
        lam = Partition(tuple(lam))
    if r < 0:
        raise RangeError(f"rank must be non-negative, got {r}")
    if lam.length > r:
        return 0
    return _boerner(lam.padded(r), r)
