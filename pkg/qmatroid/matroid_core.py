"""Represented and rank-oracle matroids, their minors and duals, and the subset-sum invariants."""

import itertools
import logging
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, Hashable, Iterable, Iterator, List, Optional, Sequence, Tuple

from .enumeration import ensure_within_budget
from .errors import RankAxiomViolation, UnknownLabel, ZeroArgument
from .finite_field import Field, FieldElement
from .linalg_fq import FqMatrix, det, rank, reduced_row_echelon, row_reduce_full_rank
from .polynomials import BiPoly, Number, UniPoly

logger = logging.getLogger(__name__)

Label = Hashable
Subset = FrozenSet[Label]

# Exhaustive axiom checks are skipped above this ground-set size.
VALIDATION_LIMIT = 10


def subsets(ground: Sequence[Label], budget: Optional[int] = None, what: str = "subset sum") -> Iterator[Subset]:
    """Every subset of ground, by increasing size, after a budget check on 2^|ground|."""
    ensure_within_budget(2 ** len(ground), budget, what)
    return (
        frozenset(combo)
        for k in range(len(ground) + 1)
        for combo in itertools.combinations(ground, k)
    )


class Matroid(ABC):
    """A matroid on an ordered ground set, queried through its rank function."""

    def __init__(self, ground: Iterable[Label], name: str = ""):
        ground = tuple(ground)
        if len(set(ground)) != len(ground):
            raise ValueError(f"duplicate ground-set labels in {ground}")
        self.ground = ground
        self.name = name
        self._ground_set = frozenset(ground)
        self._rank_cache: Dict[Subset, int] = {}

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r}, |E|={len(self.ground)}, r={self.full_rank})"

    def __len__(self) -> int:
        return len(self.ground)

    def _checked(self, subset: Iterable[Label]) -> Subset:
        subset = frozenset(subset)
        unknown = subset - self._ground_set
        if unknown:
            raise UnknownLabel(f"labels {sorted(map(str, unknown))} are not in the ground set of {self.name or 'matroid'}")
        return subset

    def _ordered(self, subset: Iterable[Label]) -> Tuple[Label, ...]:
        subset = frozenset(subset)
        return tuple(e for e in self.ground if e in subset)

    def rank_of(self, subset: Iterable[Label]) -> int:
        subset = self._checked(subset)
        if subset not in self._rank_cache:
            self._rank_cache[subset] = self._rank(subset)
        return self._rank_cache[subset]

    @abstractmethod
    def _rank(self, subset: Subset) -> int:
        ...

    @property
    def full_rank(self) -> int:
        return self.rank_of(self.ground)

    def is_loop(self, e: Label) -> bool:
        return self.rank_of({e}) == 0

    def is_coloop(self, e: Label) -> bool:
        return self.rank_of(self._ground_set - {e}) < self.full_rank

    @abstractmethod
    def restrict(self, subset: Iterable[Label]) -> "Matroid":
        ...

    def delete(self, subset: Iterable[Label]) -> "Matroid":
        return self.restrict(self._ground_set - self._checked(subset))

    @abstractmethod
    def contract(self, subset: Iterable[Label]) -> "Matroid":
        ...

    def dual(self) -> "Matroid":
        return self.as_oracle().dual()

    @abstractmethod
    def relabel(self, mapping: Dict[Label, Label]) -> "Matroid":
        ...

    def as_oracle(self) -> "RankOracleMatroid":
        return RankOracleMatroid(self.ground, self.rank_of, name=self.name)


class RankOracleMatroid(Matroid):
    """Matroid given by a rank function on frozensets of labels.

    Args:
        ground: ordered ground-set labels
        rank_fn: function from frozensets of labels to non-negative integers
        name: display name
        validate: check the rank axioms exhaustively when |E| <= VALIDATION_LIMIT
    """

    def __init__(
        self,
        ground: Iterable[Label],
        rank_fn: Callable[[Subset], int],
        name: str = "",
        validate: bool = False,
    ):
        super().__init__(ground, name)
        self.rank_fn = rank_fn
        if validate:
            self.validate()

    @classmethod
    def uniform(cls, k: int, n: int, labels: Optional[Sequence[Label]] = None, validate: bool = False) -> "RankOracleMatroid":
        if not 0 <= k <= n:
            raise ValueError(f"U({k},{n}) needs 0 <= k <= n")
        labels = tuple(labels) if labels is not None else tuple(range(1, n + 1))
        return cls(labels, lambda subset: min(len(subset), k), name=f"U{k}{n}", validate=validate)

    def _rank(self, subset: Subset) -> int:
        return int(self.rank_fn(subset))

    def validate(self) -> None:
        """Normalization, unit increase and local submodularity on every subset."""
        n = len(self.ground)
        if n > VALIDATION_LIMIT:
            logger.warning("Skipping rank-axiom validation of %s: %d > %d elements", self.name, n, VALIDATION_LIMIT)
            return
        if self.rank_of(()) != 0:
            raise RankAxiomViolation(f"{self.name}: r(empty) = {self.rank_of(())}")
        for subset in subsets(self.ground, what="rank-axiom validation"):
            r = self.rank_of(subset)
            outside = [e for e in self.ground if e not in subset]
            for e in outside:
                step = self.rank_of(subset | {e}) - r
                if step not in (0, 1):
                    raise RankAxiomViolation(f"{self.name}: adding {e} to {set(subset)} changes the rank by {step}")
            for e, f in itertools.combinations(outside, 2):
                if self.rank_of(subset | {e, f}) + r > self.rank_of(subset | {e}) + self.rank_of(subset | {f}):
                    raise RankAxiomViolation(f"{self.name}: submodularity fails at {set(subset)} with {e}, {f}")
        logger.debug("Rank axioms hold for %s", self.name)

    def restrict(self, subset: Iterable[Label]) -> "RankOracleMatroid":
        kept = self._ordered(self._checked(subset))
        return RankOracleMatroid(kept, self.rank_of, name=f"{self.name}|{_subset_name(kept)}")

    def contract(self, subset: Iterable[Label]) -> "RankOracleMatroid":
        contracted = self._checked(subset)
        base = self.rank_of(contracted)
        remaining = self._ordered(self._ground_set - contracted)
        return RankOracleMatroid(
            remaining,
            lambda x: self.rank_of(x | contracted) - base,
            name=f"{self.name}/{_subset_name(self._ordered(contracted))}",
        )

    def dual(self) -> "RankOracleMatroid":
        full = self.full_rank
        ground = self._ground_set
        return RankOracleMatroid(
            self.ground,
            lambda x: len(x) - full + self.rank_of(ground - x),
            name=f"{self.name}*",
        )

    def relabel(self, mapping: Dict[Label, Label]) -> "RankOracleMatroid":
        inverse = {mapping.get(e, e): e for e in self.ground}
        return RankOracleMatroid(
            tuple(mapping.get(e, e) for e in self.ground),
            lambda x: self.rank_of(inverse[e] for e in x),
            name=self.name,
        )


class RepMatroid(Matroid):
    """Matroid of the columns of a full-row-rank matrix over GF(q).

    Dependent rows are dropped at construction. Columns are labelled 1..n unless the
    matrix carries column labels.
    """

    def __init__(self, matrix: FqMatrix, name: str = ""):
        col_labels = matrix.col_labels if matrix.col_labels is not None else tuple(range(1, matrix.cols + 1))
        row_labels = matrix.row_labels if matrix.row_labels is not None else tuple(range(matrix.rows))
        matrix = FqMatrix(matrix.field, matrix.rows, matrix.cols, matrix.entries, row_labels, col_labels)
        self.matrix = row_reduce_full_rank(matrix)
        super().__init__(col_labels, name)
        self._column_index = {e: j for j, e in enumerate(col_labels)}
        self._bases: Optional[List[Tuple[Tuple[Label, ...], FieldElement]]] = None

    @property
    def field(self) -> Field:
        return self.matrix.field

    @property
    def rows(self) -> Tuple[Label, ...]:
        return self.matrix.row_labels

    def columns(self, subset: Iterable[Label]) -> FqMatrix:
        return self.matrix.select_columns([self._column_index[e] for e in self._ordered(subset)])

    def _rank(self, subset: Subset) -> int:
        return rank(self.columns(subset))

    @property
    def full_rank(self) -> int:
        return self.matrix.rows

    def restrict(self, subset: Iterable[Label]) -> "RepMatroid":
        kept = self._ordered(self._checked(subset))
        return RepMatroid(self.columns(kept), name=f"{self.name}|{_subset_name(kept)}")

    def contract(self, subset: Iterable[Label]) -> "RepMatroid":
        """Contract element by element: a zero column is dropped; otherwise pivot on it,
        clear its column and drop the pivot row together with the column."""
        contracted = self._checked(subset)
        grid = [list(row) for row in self.matrix.entries]
        rows = list(self.matrix.row_labels)
        cols = list(self.ground)
        for e in self._ordered(contracted):
            j = cols.index(e)
            pivot = next((i for i, row in enumerate(grid) if row[j]), None)
            if pivot is not None:
                inv = grid[pivot][j].inverse()
                for i, row in enumerate(grid):
                    if i != pivot and row[j]:
                        factor = row[j] * inv
                        grid[i] = [x - factor * y for x, y in zip(row, grid[pivot])]
                del grid[pivot]
                del rows[pivot]
            for row in grid:
                del row[j]
            del cols[j]
        matrix = FqMatrix(self.field, len(grid), len(cols), tuple(tuple(row) for row in grid), tuple(rows), tuple(cols))
        return RepMatroid(matrix, name=f"{self.name}/{_subset_name(self._ordered(contracted))}")

    def dual(self) -> "RepMatroid":
        """Standard form [I | D] becomes [-D^T | I]; every column keeps its label."""
        echelon, pivots = reduced_row_echelon(self.matrix)
        field = self.field
        n = self.matrix.cols
        free = [j for j in range(n) if j not in pivots]
        entries = []
        for k, j_free in enumerate(free):
            row = [field.zero] * n
            for i, j_pivot in enumerate(pivots):
                row[j_pivot] = -echelon.entries[i][j_free]
            row[j_free] = field.one
            entries.append(tuple(row))
        matrix = FqMatrix(field, len(free), n, tuple(entries), tuple(range(len(free))), self.ground)
        return RepMatroid(matrix, name=f"{self.name}*")

    def relabel(self, mapping: Dict[Label, Label]) -> "RepMatroid":
        labels = tuple(mapping.get(e, e) for e in self.ground)
        m = self.matrix
        return RepMatroid(FqMatrix(m.field, m.rows, m.cols, m.entries, m.row_labels, labels), name=self.name)

    def bases(self) -> List[Tuple[Tuple[Label, ...], FieldElement]]:
        """Every basis B with det(M|_B); the rank-0 matroid has the single pair ((), 1)."""
        if self._bases is None:
            r = self.full_rank
            found = []
            for basis in itertools.combinations(self.ground, r):
                d = det(self.columns(basis))
                if d:
                    found.append((basis, d))
            if r == 0:
                found = [((), self.field.one)]
            self._bases = found
        return self._bases


def _subset_name(labels: Sequence[Label]) -> str:
    return "{" + ",".join(str(e) for e in labels) + "}"


def rank_of(m: Matroid, subset: Iterable[Label]) -> int:
    return m.rank_of(subset)


def minor(m: Matroid, op: str, subset: Iterable[Label]) -> Matroid:
    """op is one of restrict, delete, contract."""
    operations = {"restrict": m.restrict, "delete": m.delete, "contract": m.contract}
    if op not in operations:
        raise ValueError(f"unknown minor operation {op!r}")
    return operations[op](subset)


def dual(m: Matroid) -> Matroid:
    return m.dual()


def bases(m: RepMatroid) -> List[Tuple[Tuple[Label, ...], FieldElement]]:
    return m.bases()


def char_poly(m: Matroid, budget: Optional[int] = None) -> UniPoly:
    """chi_M(x) = sum over A of (-1)^|A| x^(r(E) - r(A))."""
    full = m.full_rank
    coeffs: Dict[int, int] = {}
    for subset in subsets(m.ground, budget, "characteristic polynomial"):
        k = full - m.rank_of(subset)
        coeffs[k] = coeffs.get(k, 0) + (-1) ** len(subset)
    return UniPoly.from_dict(coeffs)


def whitney_rank_poly(m: Matroid, budget: Optional[int] = None) -> BiPoly:
    """R_M(u, v) = sum over A of u^(r(E) - r(A)) v^(|A| - r(A))."""
    full = m.full_rank
    terms: Dict[Tuple[int, int], int] = {}
    for subset in subsets(m.ground, budget, "Whitney rank polynomial"):
        r = m.rank_of(subset)
        key = (full - r, len(subset) - r)
        terms[key] = terms.get(key, 0) + 1
    return BiPoly.from_dict(terms)


def tutte_poly(m: Matroid, budget: Optional[int] = None) -> BiPoly:
    """T_M(x, y) = R_M(x - 1, y - 1)."""
    return whitney_rank_poly(m, budget).shift(-1, -1)


def rank_poly_diagonal_check(m: Matroid, x: Number, budget: Optional[int] = None) -> bool:
    """R_M(x, 1/x) == (1 + 1/x)^|E| x^r(E)."""
    if x == 0:
        raise ZeroArgument("the diagonal identity needs x != 0")
    x = Fraction(x)
    lhs = whitney_rank_poly(m, budget)(x, 1 / x)
    rhs = (1 + 1 / x) ** len(m.ground) * x ** m.full_rank
    return lhs == rhs


def same_rank_function(first: Matroid, second: Matroid, budget: Optional[int] = None) -> bool:
    """Equal ground sets and equal ranks on every subset."""
    if first._ground_set != second._ground_set:
        return False
    return all(
        first.rank_of(subset) == second.rank_of(subset)
        for subset in subsets(first.ground, budget, "rank comparison")
    )
