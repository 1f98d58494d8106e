"""The alpha-representation of chi_{M*}(q) for GF(q)-represented matroids.

For every alpha in (F_q^*)^E the weighted Laplacian L = M diag(alpha) M^T gives a
rank r* and the quadratic character of a maximal nonzero principal minor. Summing
g(q, r*) times that character over all alpha yields chi of the dual matroid at q.
The counting oracles below compute the same number in independent ways.
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from .enumeration import decode_index, ensure_within_budget, map_chunks
from .errors import RepresentationCollapse, UnknownLabel, ZeroCoefficient
from .finite_field import Field, FieldElement, count_linear_solutions, field_for_order, quadratic_character, split_prime_power
from .linalg_fq import (
    FqMatrix,
    det,
    max_nonsingular_principal,
    nonsingular_principal_minors,
    rank,
)
from .matroid_core import RepMatroid, char_poly

logger = logging.getLogger(__name__)

Label = Hashable

G_CONVENTIONS = ("characteristic", "cardinality")
W_ORACLES = ("shortcut", "subset-search")


@dataclass(frozen=True)
class AlphaVector:
    """Nonzero weights alpha_e, one per ground-set label."""

    labels: Tuple[Label, ...]
    values: Tuple[FieldElement, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.values):
            raise ValueError(f"{len(self.values)} weights for {len(self.labels)} labels")
        zero = [e for e, a in zip(self.labels, self.values) if a.is_zero()]
        if zero:
            raise ZeroCoefficient(f"alpha vanishes at {zero}")

    @classmethod
    def of(cls, m: RepMatroid, values: Sequence) -> "AlphaVector":
        return cls(m.ground, tuple(m.field.element(v) for v in values))

    def __getitem__(self, label: Label) -> FieldElement:
        return self.values[self.labels.index(label)]

    def __str__(self) -> str:
        return "(" + ", ".join(str(a) for a in self.values) + ")"


def alpha_vectors(m: RepMatroid, budget: Optional[int] = None) -> Iterable[AlphaVector]:
    """All of (F_q^*)^E, last label varying fastest."""
    ensure_within_budget((m.field.q - 1) ** len(m.ground), budget, "alpha vectors")
    for values in itertools.product(m.field.nonzero(), repeat=len(m.ground)):
        yield AlphaVector(m.ground, values)


def basis_sum(m: RepMatroid, alpha: AlphaVector) -> FieldElement:
    """s(M; alpha) = sum over bases B of det^2(M|_B) prod_{e in B} alpha_e; 1 at rank 0."""
    total = m.field.zero
    for basis, d in m.bases():
        term = d * d
        for e in basis:
            term = term * alpha[e]
        total = total + term
    return total


def weighted_laplacian(m: RepMatroid, alpha: AlphaVector) -> FqMatrix:
    """L(M; alpha) = M diag(alpha) M^T, indexed by the rows of M."""
    matrix = m.matrix
    weights = [alpha[e] for e in m.ground]
    entries = []
    for row_i in matrix.entries:
        weighted = [x * a for x, a in zip(row_i, weights)]
        entries.append(
            tuple(sum((x * y for x, y in zip(weighted, row_j)), m.field.zero) for row_j in matrix.entries)
        )
    return FqMatrix(m.field, matrix.rows, matrix.rows, tuple(entries), matrix.row_labels, matrix.row_labels)


@dataclass(frozen=True)
class WStar:
    """A minimum row set W with s(M/W; alpha) != 0, r* = |V| - |W|, and that nonzero sum."""

    rows: Tuple[Label, ...]
    r_star: int
    minor: FieldElement

    @property
    def eta(self) -> int:
        return quadratic_character(self.minor)


def _row_deleted_basis_sum(m: RepMatroid, keep_rows: Sequence[int], alpha: AlphaVector) -> FieldElement:
    """s of the matrix with only the given rows, summed over its bases directly."""
    sub = m.matrix.select_rows(keep_rows)
    total = m.field.zero
    if not keep_rows:
        return m.field.one
    for columns in itertools.combinations(range(sub.cols), len(keep_rows)):
        d = det(sub.select_columns(columns))
        if d:
            term = d * d
            for j in columns:
                term = term * alpha[m.ground[j]]
            total = total + term
    return total


def w_star(m: RepMatroid, alpha: AlphaVector, oracle: str = "shortcut") -> WStar:
    """W*, r* and s(M/W*; alpha).

    "shortcut" reads them off a maximal nonsingular principal submatrix of the
    weighted Laplacian; "subset-search" tries row sets W by increasing size.
    """
    labels = m.rows
    n = len(labels)
    if oracle == "shortcut":
        keep, minor = max_nonsingular_principal(weighted_laplacian(m, alpha))
    elif oracle == "subset-search":
        keep, minor = None, None
        for size in range(n, -1, -1):
            for candidate in itertools.combinations(range(n), size):
                value = _row_deleted_basis_sum(m, candidate, alpha)
                if value:
                    keep, minor = candidate, value
                    break
            if keep is not None:
                break
    else:
        raise ValueError(f"unknown W* oracle {oracle!r}; expected one of {W_ORACLES}")
    removed = tuple(labels[i] for i in range(n) if i not in keep)
    return WStar(removed, len(keep), minor)


def minimal_w_sets(m: RepMatroid, alpha: AlphaVector) -> List[WStar]:
    """Every minimum-cardinality W with s(M/W; alpha) != 0."""
    laplacian = weighted_laplacian(m, alpha)
    labels = m.rows
    r = rank(laplacian)
    if r == 0:
        return [WStar(tuple(labels), 0, m.field.one)]
    return [
        WStar(tuple(labels[i] for i in range(len(labels)) if i not in keep), r, minor)
        for keep, minor in nonsingular_principal_minors(laplacian, r)
    ]


def g_weight(q: int, n: int, convention: str = "characteristic") -> Fraction:
    """g(q, n): 0 for odd n, otherwise 1/q^(n/2) or 1/(-q)^(n/2).

    The sign is chosen by p mod 4 under the "characteristic" convention and by
    q mod 4 under the "cardinality" one. g(q, 0) = 1.
    """
    p, _ = split_prime_power(q)
    if n < 0:
        raise ValueError(f"negative rank {n}")
    if convention not in G_CONVENTIONS:
        raise ValueError(f"unknown g convention {convention!r}; expected one of {G_CONVENTIONS}")
    if n % 2:
        return Fraction(0)
    selector = p if convention == "characteristic" else q
    base = q if selector % 4 == 1 else -q
    return Fraction(1, base ** (n // 2))


@dataclass
class Theorem1Census:
    """Per-rank tallies of the alpha-sum.

    histogram[n] counts alpha with r* = n, eta_sums[n] sums the characters of
    their minors, degenerate lists the alpha with r* = 0 when requested.
    """

    q: int
    histogram: Counter = dataclass_field(default_factory=Counter)
    eta_sums: Counter = dataclass_field(default_factory=Counter)
    degenerate: List[Tuple[FieldElement, ...]] = dataclass_field(default_factory=list)

    def total(self, convention: str = "characteristic") -> Fraction:
        return sum(
            (g_weight(self.q, n, convention) * s for n, s in sorted(self.eta_sums.items())),
            Fraction(0),
        )

    def merge(self, other: "Theorem1Census") -> None:
        self.histogram.update(other.histogram)
        self.eta_sums.update(other.eta_sums)
        self.degenerate.extend(other.degenerate)


def _census_chunk(
    matrix: FqMatrix, oracle: str, collect_degenerate: bool, start: int, stop: int
) -> Theorem1Census:
    m = RepMatroid(matrix)
    field = m.field
    nonzero = field.nonzero()
    census = Theorem1Census(field.q)
    for index in range(start, stop):
        digits = decode_index(index, field.q - 1, len(m.ground))
        values = tuple(nonzero[k] for k in digits)
        found = w_star(m, AlphaVector(m.ground, values), oracle)
        census.histogram[found.r_star] += 1
        census.eta_sums[found.r_star] += found.eta
        if collect_degenerate and found.r_star == 0:
            census.degenerate.append(values)
    return census


def theorem1_census(
    m: RepMatroid,
    budget: Optional[int] = None,
    workers: int = 1,
    oracle: str = "shortcut",
    collect_degenerate: bool = False,
) -> Theorem1Census:
    """Run the alpha-sum over (F_q^*)^E in deterministic chunks."""
    total = (m.field.q - 1) ** len(m.ground)
    ensure_within_budget(total, budget, f"alpha-sum for {m.name or 'matroid'}")
    census = Theorem1Census(m.field.q)
    for chunk in map_chunks(_census_chunk, total, workers, m.matrix, oracle, collect_degenerate):
        census.merge(chunk)
    logger.debug("r* histogram for %s over GF(%d): %s", m.name, m.field.q, dict(census.histogram))
    return census


def theorem1_rhs(
    m: RepMatroid,
    budget: Optional[int] = None,
    workers: int = 1,
    oracle: str = "shortcut",
    convention: str = "characteristic",
) -> Fraction:
    """sum over alpha of g(q, r*(M; alpha)) * eta(s(M/W*; alpha)), exactly."""
    return theorem1_census(m, budget, workers, oracle).total(convention)


def u24_matrix(field: Field) -> FqMatrix:
    """The 2x4 representation with columns (1,0), (0,1), (1,1), (1,-1)."""
    return FqMatrix.from_values(field, [[1, 0, 1, 1], [0, 1, 1, -1]], col_labels=(1, 2, 3, 4))


def u24_represents_uniform(field: Field) -> bool:
    """Every pair of columns of u24_matrix is independent over the field."""
    matrix = u24_matrix(field)
    return all(det(matrix.select_columns(pair)) for pair in itertools.combinations(range(4), 2))


def u24_reduced_sides(q: int, budget: Optional[int] = None, convention: str = "characteristic") -> Tuple[Fraction, Fraction]:
    """((q-1)(q-4), g(q,2) * sum over alpha of eta(s(M; alpha))) for U_{2,4}."""
    field = field_for_order(q)
    if not u24_represents_uniform(field):
        raise RepresentationCollapse(f"the U24 matrix does not represent U(2,4) over {field}")
    m = RepMatroid(u24_matrix(field), name="U24")
    ensure_within_budget((q - 1) ** 4, budget, "U24 reduced check")
    character_sum = sum(quadratic_character(basis_sum(m, alpha)) for alpha in alpha_vectors(m, budget))
    return Fraction((q - 1) * (q - 4)), g_weight(q, 2, convention) * character_sum


def u24_reduced_check(q: int, budget: Optional[int] = None, convention: str = "characteristic") -> bool:
    lhs, rhs = u24_reduced_sides(q, budget, convention)
    return lhs == rhs


def _images(m: RepMatroid, budget: Optional[int], what: str):
    """y = xM for every x in F_q^V."""
    field = m.field
    ensure_within_budget(field.q ** m.matrix.rows, budget, what)
    columns = [m.matrix.column(j) for j in range(m.matrix.cols)]
    for x in itertools.product(field.elements(), repeat=m.matrix.rows):
        yield tuple(sum((a * c for a, c in zip(x, column)), field.zero) for column in columns)


def nowhere_zero_kernel_count(m: RepMatroid, budget: Optional[int] = None) -> int:
    """Number of alpha in (F_q^*)^E with M alpha = 0."""
    field = m.field
    ensure_within_budget((field.q - 1) ** len(m.ground), budget, "nowhere-zero kernel")
    rows = m.matrix.entries
    count = 0
    for alpha in itertools.product(field.nonzero(), repeat=len(m.ground)):
        if all(not sum((x * a for x, a in zip(row, alpha)), field.zero) for row in rows):
            count += 1
    return count


def quadratic_form_distribution(m: RepMatroid, j: int, budget: Optional[int] = None) -> Dict[FieldElement, int]:
    """N_b(j) for every b: pairs (x, alpha) with sum_e alpha_e (xM)_e^j = b.

    For fixed x only the number k of nonzero (xM)_e matters, so the alpha part is a
    count of solutions of beta_1 + ... + beta_k = b scaled by (q-1)^(|E|-k). This
    makes the result independent of j; direct_quadratic_form_distribution evaluates
    the forms themselves.
    """
    if j < 1:
        raise ValueError(f"exponent j must be positive, got {j}")
    field = m.field
    n = len(m.ground)
    ensure_within_budget(field.q ** m.matrix.rows * (field.q - 1) ** n, budget, "quadratic form census")
    support_sizes: Counter = Counter()
    for y in _images(m, budget, "quadratic form census"):
        support_sizes[sum(1 for value in y if value)] += 1
    distribution = {b: 0 for b in field.elements()}
    for k, multiplicity in support_sizes.items():
        free = (field.q - 1) ** (n - k)
        for b in field.elements():
            distribution[b] += multiplicity * free * count_linear_solutions([1] * k, b, budget)
    return distribution


def direct_quadratic_form_distribution(m: RepMatroid, j: int, budget: Optional[int] = None) -> Dict[FieldElement, int]:
    """N_b(j) by evaluating sum_e alpha_e (xM)_e^j for every pair (x, alpha)."""
    if j < 1:
        raise ValueError(f"exponent j must be positive, got {j}")
    field = m.field
    ensure_within_budget(field.q ** m.matrix.rows * (field.q - 1) ** len(m.ground), budget, "quadratic form pairs")
    alphas = list(itertools.product(field.nonzero(), repeat=len(m.ground)))
    distribution = {b: 0 for b in field.elements()}
    for y in _images(m, budget, "quadratic form pairs"):
        powers = [value**j for value in y]
        for alpha in alphas:
            distribution[sum((a * z for a, z in zip(alpha, powers)), field.zero)] += 1
    return distribution


def quadratic_form_count(m: RepMatroid, j: int, b: FieldElement, budget: Optional[int] = None) -> int:
    return quadratic_form_distribution(m, j, budget)[m.field.element(b)]


def lemma_chi(m: RepMatroid, j: int, budget: Optional[int] = None, direct: bool = False) -> Fraction:
    """(N_0(j) - N_1(j)) / q^|V|, from the support shortcut or, with direct, from every pair."""
    counter = direct_quadratic_form_distribution if direct else quadratic_form_distribution
    distribution = counter(m, j, budget)
    field = m.field
    return Fraction(distribution[field.zero] - distribution[field.one], field.q ** m.matrix.rows)


def chevalley_zero_count(b: FqMatrix) -> int:
    """Number of x with x B x^T = 0 for symmetric B, from rank and a principal minor."""
    keep, d = max_nonsingular_principal(b)
    q = b.field.q
    n = b.rows
    m = len(keep)
    if m == 0:
        return q**n
    if m % 2:
        return q ** (n - 1)
    sign = b.field.one if (m // 2) % 2 == 0 else -b.field.one
    eta = quadratic_character(sign * d)
    return q ** (n - m) * (q ** (m - 1) + (q - 1) * q ** ((m - 2) // 2) * eta)


def brute_force_zero_count(b: FqMatrix, budget: Optional[int] = None) -> int:
    field = b.field
    ensure_within_budget(field.q**b.rows, budget, "quadratic form zeros")
    count = 0
    for x in itertools.product(field.elements(), repeat=b.rows):
        value = field.zero
        for i, xi in enumerate(x):
            if xi:
                value = value + xi * sum((b.entries[i][k] * xk for k, xk in enumerate(x)), field.zero)
        if value.is_zero():
            count += 1
    return count


def contraction_pattern_count(m: RepMatroid, subset: Iterable[Label], budget: Optional[int] = None) -> int:
    """Vectors x with (xM)_e = 0 exactly on the given subset; equals chi_{M/A}(q)."""
    chosen = frozenset(subset)
    unknown = chosen - set(m.ground)
    if unknown:
        raise UnknownLabel(f"labels {sorted(map(str, unknown))} are not in the ground set of {m.name or 'matroid'}")
    zero_on = [e in chosen for e in m.ground]
    count = 0
    for y in _images(m, budget, "contraction pattern"):
        if all(value.is_zero() == wanted for value, wanted in zip(y, zero_on)):
            count += 1
    return count


def dual_char_value(m: RepMatroid, budget: Optional[int] = None) -> int:
    """chi_{M*}(q) through the subset expansion on the dual."""
    return int(char_poly(m.dual(), budget)(m.field.q))
