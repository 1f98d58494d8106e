"""Subset-convolution identities for chi_{M*} and the rank generating function.

Every identity here holds for arbitrary matroids, so rank-oracle matroids work as
well as represented ones. Sides are evaluated exactly at integer points q >= 2;
an identity between polynomials of degree at most D is certified by agreement at
D + 1 points.
"""

import logging
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from .errors import InvalidQ
from .matroid_core import Matroid, char_poly, subsets, tutte_poly, whitney_rank_poly
from .polynomials import BiPoly, Number, UniPoly
from .report import IdentityReport

logger = logging.getLogger(__name__)


def _check_q(q) -> None:
    if not isinstance(q, int) or q < 2:
        raise InvalidQ(f"identities are evaluated at integers q >= 2 (poles at q = 0 and 1); got {q!r}")


def _zeta(q: int, z: int) -> Fraction:
    return 1 / (1 - Fraction(q) ** -z)


def dual_char_value(m: Matroid, q: int, budget: Optional[int] = None) -> Fraction:
    return char_poly(m.dual(), budget)(q)


def restriction_terms(m: Matroid, budget: Optional[int] = None) -> List[Tuple[int, int, UniPoly]]:
    """(|A|, r(A), chi_{M|A}) for every subset A."""
    return [
        (len(a), m.rank_of(a), char_poly(m.restrict(a), budget))
        for a in subsets(m.ground, budget, "restriction expansion")
    ]


def contraction_terms(m: Matroid, budget: Optional[int] = None) -> List[Tuple[int, UniPoly]]:
    """(|A|, chi_{M/A}) for every subset A."""
    return [(len(a), char_poly(m.contract(a), budget)) for a in subsets(m.ground, budget, "contraction expansion")]


def theorem2_restriction_rhs(
    m: Matroid, q: int, budget: Optional[int] = None, terms: Optional[Sequence[Tuple[int, int, UniPoly]]] = None
) -> Fraction:
    """(q-1)^|E| sum over A of (q/(1-q))^|A| chi_{M|A}(q) / q^r(A)."""
    _check_q(q)
    terms = restriction_terms(m, budget) if terms is None else terms
    ratio = Fraction(q, 1 - q)
    total = sum((ratio**size * chi(q) / Fraction(q) ** r for size, r, chi in terms), Fraction(0))
    return (q - 1) ** len(m.ground) * total


def theorem2_contraction_rhs(
    m: Matroid, q: int, budget: Optional[int] = None, terms: Optional[Sequence[Tuple[int, UniPoly]]] = None
) -> Fraction:
    """q^-r(E) sum over A of (-1)^(|E|-|A|) (q-1)^|A| chi_{M/A}(q)."""
    _check_q(q)
    terms = contraction_terms(m, budget) if terms is None else terms
    n = len(m.ground)
    total = sum(((-1) ** (n - size) * (q - 1) ** size * chi(q) for size, chi in terms), Fraction(0))
    return total / Fraction(q) ** m.full_rank


def zeta_forms_sides(m: Matroid, q: int, budget: Optional[int] = None) -> Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]:
    """Sides of the zeta-function form of the restriction expansion and of its Moebius inversion."""
    _check_q(q)
    n = len(m.ground)
    zeta_plus, zeta_minus = _zeta(q, 1), _zeta(q, -1)
    dual = m.dual()

    restriction_lhs = char_poly(dual, budget)(q) * zeta_minus**n
    restriction_rhs = sum(
        ((-1) ** (n - size) * chi(q) / Fraction(q) ** r * zeta_plus**size for size, r, chi in restriction_terms(m, budget)),
        Fraction(0),
    )

    inverted_lhs = char_poly(m, budget)(q) / Fraction(q) ** m.full_rank * zeta_plus**n
    everything = frozenset(m.ground)
    inverted_rhs = sum(
        (zeta_minus ** len(a) * char_poly(dual.contract(everything - a), budget)(q) for a in subsets(m.ground, budget, "zeta expansion")),
        Fraction(0),
    )
    return (restriction_lhs, restriction_rhs), (inverted_lhs, inverted_rhs)


def zeta_forms_check(m: Matroid, q: int, budget: Optional[int] = None) -> bool:
    (restriction_lhs, restriction_rhs), (inverted_lhs, inverted_rhs) = zeta_forms_sides(m, q, budget)
    return restriction_lhs == restriction_rhs and inverted_lhs == inverted_rhs


def dual_zeta_sides(m: Matroid, q: int, budget: Optional[int] = None) -> Tuple[Fraction, Fraction]:
    """The Moebius-inverted zeta form written for the dual matroid."""
    _check_q(q)
    dual = m.dual()
    lhs = char_poly(dual, budget)(q) / Fraction(q) ** dual.full_rank * _zeta(q, 1) ** len(m.ground)
    everything = frozenset(m.ground)
    rhs = sum(
        (_zeta(q, -1) ** len(a) * char_poly(m.contract(everything - a), budget)(q) for a in subsets(m.ground, budget, "zeta expansion")),
        Fraction(0),
    )
    return lhs, rhs


def dual_zeta_check(m: Matroid, q: int, budget: Optional[int] = None) -> bool:
    lhs, rhs = dual_zeta_sides(m, q, budget)
    return lhs == rhs


def reiner_convolution_sides(m: Matroid, budget: Optional[int] = None) -> Tuple[BiPoly, BiPoly]:
    """(T_M(x, y), sum over A of T_{M|A}(0, y) T_{M/A}(x, 0))."""
    total = BiPoly()
    for a in subsets(m.ground, budget, "Tutte convolution"):
        in_y = tutte_poly(m.restrict(a), budget).specialize(u=0)
        in_x = tutte_poly(m.contract(a), budget).specialize(v=0)
        total = total + BiPoly.from_dict(
            {(i, j): cx * cy for i, cx in enumerate(in_x.coeffs) for j, cy in enumerate(in_y.coeffs) if cx and cy}
        )
    return tutte_poly(m, budget), total


def reiner_convolution_check(m: Matroid, budget: Optional[int] = None) -> bool:
    lhs, rhs = reiner_convolution_sides(m, budget)
    return lhs == rhs


KungTerm = Tuple[int, int, BiPoly, BiPoly]


def kung_terms(m: Matroid, budget: Optional[int] = None) -> List[KungTerm]:
    """(|A|, r(A), R_{M|A}, R_{M/A}) for every subset A."""
    return [
        (len(a), m.rank_of(a), whitney_rank_poly(m.restrict(a), budget), whitney_rank_poly(m.contract(a), budget))
        for a in subsets(m.ground, budget, "rank-polynomial convolution")
    ]


def kung_sides(
    m: Matroid,
    lam: Number,
    xi: Number,
    x: Number,
    y: Number,
    budget: Optional[int] = None,
    terms: Optional[Sequence[KungTerm]] = None,
) -> Tuple[Fraction, Fraction]:
    """R_M(lam*xi, x*y) and sum over A of lam^(r(E)-r(A)) (-y)^(|A|-r(A)) R_{M|A}(-lam, -x) R_{M/A}(xi, y)."""
    lam, xi, x, y = (Fraction(v) for v in (lam, xi, x, y))
    terms = kung_terms(m, budget) if terms is None else terms
    full = m.full_rank
    lhs = whitney_rank_poly(m, budget)(lam * xi, x * y)
    rhs = sum(
        (
            lam ** (full - r) * (-y) ** (size - r) * restricted(-lam, -x) * contracted(xi, y)
            for size, r, restricted, contracted in terms
        ),
        Fraction(0),
    )
    return lhs, rhs


def kung_identity_check(m: Matroid, lam: Number, xi: Number, x: Number, y: Number, budget: Optional[int] = None) -> bool:
    lhs, rhs = kung_sides(m, lam, xi, x, y, budget)
    return lhs == rhs


def kung_specialization_values(m: Matroid, q: int, budget: Optional[int] = None) -> Tuple[Fraction, Fraction, Fraction]:
    """The two specializations with lam*xi = -1, x*y = -q, and (-1)^(|E|-r(E)) chi_{M*}(q)."""
    _check_q(q)
    terms = kung_terms(m, budget)
    _, restriction_form = kung_sides(m, q, Fraction(-1, q), 1, -q, budget, terms)
    _, contraction_form = kung_sides(m, Fraction(1, q), -q, q, -1, budget, terms)
    sign = (-1) ** (len(m.ground) - m.full_rank)
    return restriction_form, contraction_form, sign * dual_char_value(m, q, budget)


def kung_specialization_check(m: Matroid, q: int, budget: Optional[int] = None) -> bool:
    """Both specializations equal (-1)^(|E|-r(E)) chi_{M*}(q) and the signed expansions."""
    restriction_form, contraction_form, expected = kung_specialization_values(m, q, budget)
    sign = (-1) ** (len(m.ground) - m.full_rank)
    return (
        restriction_form == expected == contraction_form
        and restriction_form == sign * theorem2_restriction_rhs(m, q, budget)
        and contraction_form == sign * theorem2_contraction_rhs(m, q, budget)
    )


def certify(
    identity: str,
    m: Matroid,
    lhs: Callable[[int], Fraction],
    rhs: Callable[[int], Fraction],
    points: Optional[Iterable[int]] = None,
    degree_bound: Optional[int] = None,
) -> IdentityReport:
    """Evaluate both sides at every point.

    Without explicit points, q = 2..degree_bound + 2 is used, one more point than
    the degree bound (which defaults to max(|E|, r(E))).
    """
    if degree_bound is None:
        degree_bound = max(len(m.ground), m.full_rank)
    points = tuple(points) if points is not None else tuple(range(2, degree_bound + 3))
    left = tuple(lhs(q) for q in points)
    right = tuple(rhs(q) for q in points)
    report = IdentityReport(identity, m.name or "matroid", points, left, right, degree_bound)
    logger.debug("%s on %s: %s", identity, report.matroid, "pass" if report.passed else "fail")
    return report


def theorem2_reports(m: Matroid, budget: Optional[int] = None) -> List[IdentityReport]:
    """Both subset expansions of chi_{M*}, certified as polynomial identities."""
    dual_chi = char_poly(m.dual(), budget)
    restriction = restriction_terms(m, budget)
    contraction = contraction_terms(m, budget)
    n, r = len(m.ground), m.full_rank
    return [
        certify(
            "dual-char-restriction", m, dual_chi, lambda q: theorem2_restriction_rhs(m, q, budget, restriction), degree_bound=n
        ),
        # multiplied through by q^r(E), both sides have degree at most |E| + r(E)
        certify(
            "dual-char-contraction", m, dual_chi, lambda q: theorem2_contraction_rhs(m, q, budget, contraction), degree_bound=n + r
        ),
    ]


def zeta_reports(m: Matroid, points: Iterable[int], budget: Optional[int] = None) -> List[IdentityReport]:
    points = tuple(points)
    subject = m.name or "matroid"
    forms = [zeta_forms_sides(m, q, budget) for q in points]
    dual_forms = [dual_zeta_sides(m, q, budget) for q in points]
    return [
        IdentityReport("zeta-restriction", subject, points, [f[0][0] for f in forms], [f[0][1] for f in forms]),
        IdentityReport("zeta-inverted", subject, points, [f[1][0] for f in forms], [f[1][1] for f in forms]),
        IdentityReport("zeta-inverted-dual", subject, points, [d[0] for d in dual_forms], [d[1] for d in dual_forms]),
    ]


def convolution_reports(
    m: Matroid, kung_points: Sequence[Tuple[Number, Number, Number, Number]], q_points: Iterable[int], budget: Optional[int] = None
) -> List[IdentityReport]:
    """Tutte convolution at coefficient level, the rank-polynomial convolution at sample
    points, and its two specializations at q_points."""
    subject = m.name or "matroid"
    tutte_lhs, tutte_rhs = reiner_convolution_sides(m, budget)
    reports = [IdentityReport("tutte-convolution", subject, (0,), (tutte_lhs.render(("x", "y")),), (tutte_rhs.render(("x", "y")),))]

    terms = kung_terms(m, budget)
    sides = [kung_sides(m, *point, budget=budget, terms=terms) for point in kung_points]
    reports.append(
        IdentityReport(
            "rank-poly-convolution",
            subject,
            tuple(range(len(sides))),
            tuple(left for left, _ in sides),
            tuple(right for _, right in sides),
            notes=tuple(f"point {i}: (lam, xi, x, y) = {tuple(str(Fraction(v)) for v in p)}" for i, p in enumerate(kung_points)),
        )
    )

    q_points = tuple(q_points)
    values = [kung_specialization_values(m, q, budget) for q in q_points]
    expected = tuple(v[2] for v in values)
    reports.append(IdentityReport("rank-poly-convolution-restriction-form", subject, q_points, tuple(v[0] for v in values), expected))
    reports.append(IdentityReport("rank-poly-convolution-contraction-form", subject, q_points, tuple(v[1] for v in values), expected))
    return reports
