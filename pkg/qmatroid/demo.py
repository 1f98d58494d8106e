"""Two worked examples, printed step by step: U(2,4) and the 4-cycle."""

import logging
from collections import defaultdict
from fractions import Fraction
from typing import List, Optional

from .catalog import GRAPHS
from .enumeration import DEFAULT_BUDGET
from .errors import ParseError, RepresentationCollapse
from .finite_field import field_for_order
from .graph_fa import chromatic_poly, flow_contraction_polys, flow_poly
from .kontsevich import (
    alpha_vectors,
    basis_sum,
    g_weight,
    theorem1_census,
    u24_matrix,
    u24_reduced_sides,
    u24_represents_uniform,
    weighted_laplacian,
)
from .linalg_fq import det
from .matroid_core import RepMatroid, char_poly, subsets

logger = logging.getLogger(__name__)

DEMOS = ("u24", "c4")
SPOT_CHECKS = 4


def demo_u24(q: int, budget: Optional[int] = DEFAULT_BUDGET, convention: str = "characteristic") -> List[str]:
    """The alpha-sum for U(2,4) over GF(q), ending with the reduced (q-1)(q-4) equality."""
    field = field_for_order(q)
    lines = [f"[info]U(2,4) over {field}, columns (1,0), (0,1), (1,1), (1,-1)[/info]"]
    if not u24_represents_uniform(field):
        lines.append(f"[warning]representation collapse: the columns are dependent over {field}[/warning]")
        return lines
    m = RepMatroid(u24_matrix(field), name="U24")
    lines.append(f"chi_U24(x) = {char_poly(m, budget)}")

    lines.append("basis sum s(M; alpha) at the first weight vectors:")
    for index, alpha in enumerate(alpha_vectors(m, budget)):
        if index == SPOT_CHECKS:
            break
        s = basis_sum(m, alpha)
        lines.append(f"  alpha = {alpha}: s = {s}, det L = {det(weighted_laplacian(m, alpha))}")

    census = theorem1_census(m, budget, collect_degenerate=True)
    for n, count in sorted(census.histogram.items()):
        lines.append(f"  r* = {n}: {count} weight vectors, character sum {census.eta_sums[n]}")
    lines.append(f"degenerate weight vectors (r* = 0): {len(census.degenerate)}")
    for values in census.degenerate:
        lines.append("  (" + ", ".join(str(a) for a in values) + ")")

    try:
        lhs, rhs = u24_reduced_sides(q, budget, convention)
    except RepresentationCollapse as e:
        lines.append(f"[warning]{e}[/warning]")
        return lines
    weight = g_weight(q, 2, convention)
    lines.append(f"g({q},2) = {weight}")
    lines.append(f"(q−1)(q−4) = {lhs}; g({q},2)·Σ η = {rhs}")
    total = census.total(convention)
    lines.append(f"alpha-sum = {total}; (q−1)(q−3) = {(q - 1) * (q - 3)}")
    style = "pass" if lhs == rhs and total == (q - 1) * (q - 3) else "fail"
    lines.append(f"[{style}]{'holds' if style == 'pass' else 'does not hold'} at q = {q}[/{style}]")
    return lines


def demo_c4(q: int, budget: Optional[int] = DEFAULT_BUDGET) -> List[str]:
    """x^|V| F_C4 against the contraction expansion, grouped by the size of H."""
    g = GRAPHS["C4"]
    n_edges = len(g.edges)
    lines = [f"[info]4-cycle, contraction expansion at q = {q}[/info]"]
    groups = defaultdict(lambda: [0, 0, Fraction(0)])
    for subset in subsets(g.edge_ids, budget, "C4 contraction expansion"):
        group = groups[len(subset)]
        group[0] += 1
        quotient = g.contract_edges(subset)
        if quotient.has_loops():
            continue
        group[1] += 1
        group[2] += (-1) ** (n_edges - len(subset)) * (q - 1) ** len(subset) * chromatic_poly(quotient, budget)(q)
    total = Fraction(0)
    for size in sorted(groups):
        count, loop_free, value = groups[size]
        total += value
        lines.append(f"  |H| = {size}: {count} subgraphs, {loop_free} loop-free quotients, contribution {value}")
    expected = q ** len(g.vertices) * flow_poly(g, budget)(q)
    lines.append(f"sum = {total}; (q−1)q⁴ = {(q - 1) * q**4}; q^|V| F_C4(q) = {expected}")
    lhs, rhs = flow_contraction_polys(g, budget)
    lines.append(f"as polynomials: {lhs} vs {rhs}")
    style = "pass" if total == expected and lhs == rhs else "fail"
    lines.append(f"[{style}]{'holds' if style == 'pass' else 'does not hold'}[/{style}]")
    return lines


def run_demo(which: str, q: int, budget: Optional[int] = DEFAULT_BUDGET, convention: str = "characteristic") -> List[str]:
    if which == "u24":
        return demo_u24(q, budget, convention)
    if which == "c4":
        return demo_c4(q, budget)
    raise ParseError(f"unknown demo {which!r}; expected one of {DEMOS}")
