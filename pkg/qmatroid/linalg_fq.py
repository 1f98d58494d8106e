"""Dense exact linear algebra over a finite Field."""

import itertools
import logging
from dataclasses import dataclass
from typing import Hashable, List, Optional, Sequence, Tuple

from .errors import FieldMismatch, IndexOutOfRange, NotSquare, NotSymmetric
from .finite_field import ElementLike, Field, FieldElement

logger = logging.getLogger(__name__)

Label = Hashable


@dataclass(frozen=True)
class FqMatrix:
    """Immutable row-major matrix with optional row labels (V) and column labels (E)."""

    field: Field
    rows: int
    cols: int
    entries: Tuple[Tuple[FieldElement, ...], ...]
    row_labels: Optional[Tuple[Label, ...]] = None
    col_labels: Optional[Tuple[Label, ...]] = None

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} grid")
        for row in self.entries:
            for entry in row:
                if entry.field != self.field:
                    raise FieldMismatch(f"entry {entry} does not belong to {self.field}")
        for name, labels, size in (("row", self.row_labels, self.rows), ("column", self.col_labels, self.cols)):
            if labels is None:
                continue
            if len(labels) != size:
                raise ValueError(f"{len(labels)} {name} labels given for {size} {name}s")
            if len(set(labels)) != len(labels):
                raise ValueError(f"duplicate {name} labels: {labels}")

    @classmethod
    def from_values(
        cls,
        field: Field,
        values: Sequence[Sequence[ElementLike]],
        row_labels: Optional[Sequence[Label]] = None,
        col_labels: Optional[Sequence[Label]] = None,
        cols: Optional[int] = None,
    ) -> "FqMatrix":
        """Build from nested ints, coefficient tuples or elements.

        cols is only needed for matrices with no rows.
        """
        entries = tuple(tuple(field.element(v) for v in row) for row in values)
        if cols is None:
            cols = len(entries[0]) if entries else len(col_labels or ())
        return cls(
            field,
            len(entries),
            cols,
            entries,
            tuple(row_labels) if row_labels is not None else None,
            tuple(col_labels) if col_labels is not None else None,
        )

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "FqMatrix":
        return cls(field, rows, cols, tuple((field.zero,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, field: Field, n: int) -> "FqMatrix":
        return cls.diagonal(field, [1] * n)

    @classmethod
    def diagonal(cls, field: Field, values: Sequence[ElementLike]) -> "FqMatrix":
        n = len(values)
        return cls.from_values(
            field, [[values[i] if i == j else 0 for j in range(n)] for i in range(n)], cols=n
        )

    def __str__(self) -> str:
        return "\n".join(" ".join(e.to_token() for e in row) for row in self.entries)

    def __getitem__(self, key: Tuple[int, int]) -> FieldElement:
        i, j = key
        return self.entries[i][j]

    def column(self, j: int) -> Tuple[FieldElement, ...]:
        return tuple(row[j] for row in self.entries)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "FqMatrix":
        return FqMatrix(
            self.field,
            self.cols,
            self.rows,
            tuple(self.column(j) for j in range(self.cols)),
            self.col_labels,
            self.row_labels,
        )

    def __matmul__(self, other: "FqMatrix") -> "FqMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        zero = self.field.zero
        entries = []
        for row in self.entries:
            out = []
            for j in range(other.cols):
                total = zero
                for k, a in enumerate(row):
                    if a:
                        total = total + a * other.entries[k][j]
                out.append(total)
            entries.append(tuple(out))
        return FqMatrix(self.field, self.rows, other.cols, tuple(entries), self.row_labels, other.col_labels)

    def select_rows(self, indices: Sequence[int]) -> "FqMatrix":
        return FqMatrix(
            self.field,
            len(indices),
            self.cols,
            tuple(self.entries[i] for i in indices),
            tuple(self.row_labels[i] for i in indices) if self.row_labels is not None else None,
            self.col_labels,
        )

    def select_columns(self, indices: Sequence[int]) -> "FqMatrix":
        return FqMatrix(
            self.field,
            self.rows,
            len(indices),
            tuple(tuple(row[j] for j in indices) for row in self.entries),
            self.row_labels,
            tuple(self.col_labels[j] for j in indices) if self.col_labels is not None else None,
        )

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self.entries[i][j] == self.entries[j][i] for i in range(self.rows) for j in range(i)
        )


def _eliminate(m: FqMatrix) -> Tuple[List[List[FieldElement]], List[int]]:
    """Reduced row echelon form of the entries and the pivot columns."""
    grid = [list(row) for row in m.entries]
    pivots: List[int] = []
    r = 0
    for c in range(m.cols):
        pivot = next((i for i in range(r, m.rows) if grid[i][c]), None)
        if pivot is None:
            continue
        grid[r], grid[pivot] = grid[pivot], grid[r]
        inv = grid[r][c].inverse()
        grid[r] = [x * inv for x in grid[r]]
        for i in range(m.rows):
            if i != r and grid[i][c]:
                factor = grid[i][c]
                grid[i] = [x - factor * y for x, y in zip(grid[i], grid[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return grid, pivots


def rank(m: FqMatrix) -> int:
    """Rank by Gaussian elimination; 0 for empty or zero matrices."""
    if m.rows == 0 or m.cols == 0:
        return 0
    return len(_eliminate(m)[1])


def reduced_row_echelon(m: FqMatrix) -> Tuple[FqMatrix, Tuple[int, ...]]:
    """The nonzero rows of the RREF of m and its pivot columns."""
    grid, pivots = _eliminate(m)
    entries = tuple(tuple(row) for row in grid[: len(pivots)])
    return FqMatrix(m.field, len(pivots), m.cols, entries, None, m.col_labels), tuple(pivots)


def det(m: FqMatrix) -> FieldElement:
    """Determinant by elimination with row pivoting; the 0x0 matrix has determinant 1."""
    if not m.is_square:
        raise NotSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    field = m.field
    grid = [list(row) for row in m.entries]
    n = m.rows
    result = field.one
    for c in range(n):
        pivot = next((i for i in range(c, n) if grid[i][c]), None)
        if pivot is None:
            return field.zero
        if pivot != c:
            grid[c], grid[pivot] = grid[pivot], grid[c]
            result = -result
        result = result * grid[c][c]
        inv = grid[c][c].inverse()
        for i in range(c + 1, n):
            if grid[i][c]:
                factor = grid[i][c] * inv
                grid[i] = [x - factor * y for x, y in zip(grid[i], grid[c])]
    return result


def row_reduce_full_rank(m: FqMatrix) -> FqMatrix:
    """Keep a maximal independent set of rows, chosen first-come."""
    kept: List[int] = []
    current = 0
    for i in range(m.rows):
        candidate = rank(m.select_rows(kept + [i]))
        if candidate > current:
            kept.append(i)
            current = candidate
    if len(kept) < m.rows:
        logger.debug("Dropped %d dependent rows", m.rows - len(kept))
    return m.select_rows(kept)


def principal_submatrix(m: FqMatrix, keep: Sequence[int]) -> FqMatrix:
    """Rows and columns with 0-based indices in keep, original order preserved."""
    if not m.is_square:
        raise NotSquare(f"principal submatrix of a {m.rows}x{m.cols} matrix")
    indices = sorted(set(keep))
    bad = [i for i in indices if not 0 <= i < m.rows]
    if bad:
        raise IndexOutOfRange(f"indices {bad} outside 0..{m.rows - 1}")
    return m.select_rows(indices).select_columns(indices)


def nonsingular_principal_minors(m: FqMatrix, size: int):
    """Yield (keep, minor) for every nonzero principal minor of the given order, lexicographically."""
    for keep in itertools.combinations(range(m.rows), size):
        minor = det(principal_submatrix(m, keep))
        if minor:
            yield keep, minor


def max_nonsingular_principal(m: FqMatrix) -> Tuple[Tuple[int, ...], FieldElement]:
    """A nonsingular principal submatrix of order rank(m) of a symmetric matrix.

    The lexicographically first index set wins. Rank 0 gives ((), 1).
    """
    if not m.is_symmetric():
        raise NotSymmetric("max_nonsingular_principal needs a symmetric matrix")
    r = rank(m)
    if r == 0:
        return (), m.field.one
    for keep, minor in nonsingular_principal_minors(m, r):
        return keep, minor
    # unreachable over odd characteristic
    raise ArithmeticError(f"no nonsingular principal minor of order {r}")
