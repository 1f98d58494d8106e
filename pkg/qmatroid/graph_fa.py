"""Multigraphs, their cycle matroids, and finite vacuum Feynman amplitudes.

Amplitudes use the two-parameter propagator Delta(x) = a + b*delta(x) with exact
rational a, b. Vertex and edge variables run over Z/q, so the state sums only
depend on the order q of the group; with a = 1, b = -1 the coordinate sum counts
proper q-colorings and the momentum sum counts nowhere-zero q-flows.
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Tuple

import networkx as nx

from .enumeration import ensure_within_budget
from .errors import InvalidQ, LoopOrIsthmus, UnknownLabel, ZeroPropagatorConstant
from .finite_field import Field
from .linalg_fq import FqMatrix
from .matroid_core import RankOracleMatroid, RepMatroid, char_poly, subsets
from .polynomials import BiPoly, Number, UniPoly
from .report import IdentityReport

logger = logging.getLogger(__name__)

Vertex = Hashable
EdgeId = Hashable


@dataclass(frozen=True)
class Edge:
    id: EdgeId
    origin: Vertex
    endpoint: Vertex

    @property
    def is_loop(self) -> bool:
        return self.origin == self.endpoint


@dataclass(frozen=True)
class Multigraph:
    """Directed multigraph with loops and parallel edges; components are computed eagerly."""

    vertices: Tuple[Vertex, ...]
    edges: Tuple[Edge, ...]
    name: str = ""
    components: Tuple[FrozenSet[Vertex], ...] = dataclass_field(default=(), init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"duplicate vertices in {self.name or 'graph'}")
        ids = [e.id for e in self.edges]
        if len(set(ids)) != len(ids):
            raise ValueError(f"duplicate edge ids in {self.name or 'graph'}")
        known = set(self.vertices)
        for e in self.edges:
            if e.origin not in known or e.endpoint not in known:
                raise ValueError(f"edge {e.id} references a vertex outside {self.name or 'graph'}")
        object.__setattr__(self, "components", self._find_components())

    @classmethod
    def build(cls, vertices: Iterable[Vertex], edges: Iterable[Tuple[EdgeId, Vertex, Vertex]], name: str = "") -> "Multigraph":
        return cls(tuple(vertices), tuple(Edge(*e) for e in edges), name)

    def _find_components(self) -> Tuple[FrozenSet[Vertex], ...]:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from((e.origin, e.endpoint, e.id) for e in self.edges)
        order = {v: i for i, v in enumerate(self.vertices)}
        found = [frozenset(c) for c in nx.connected_components(graph)]
        return tuple(sorted(found, key=lambda c: min(order[v] for v in c)))

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def edge_ids(self) -> Tuple[EdgeId, ...]:
        return tuple(e.id for e in self.edges)

    def edge(self, edge_id: EdgeId) -> Edge:
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise UnknownLabel(f"no edge {edge_id!r} in {self.name or 'graph'}")

    def has_loops(self) -> bool:
        return any(e.is_loop for e in self.edges)

    def delete_edge(self, edge_id: EdgeId) -> "Multigraph":
        self.edge(edge_id)
        return Multigraph(self.vertices, tuple(e for e in self.edges if e.id != edge_id), f"{self.name}-{edge_id}")

    def contract_edge(self, edge_id: EdgeId) -> "Multigraph":
        """Merge the endpoint into the origin; contracting a loop deletes it."""
        target = self.edge(edge_id)
        if target.is_loop:
            return self.delete_edge(edge_id)
        keep, gone = target.origin, target.endpoint

        def merged(v):
            return keep if v == gone else v

        edges = tuple(Edge(e.id, merged(e.origin), merged(e.endpoint)) for e in self.edges if e.id != edge_id)
        return Multigraph(tuple(v for v in self.vertices if v != gone), edges, f"{self.name}/{edge_id}")

    def spanning_subgraph(self, edge_ids: Iterable[EdgeId]) -> "Multigraph":
        chosen = frozenset(edge_ids)
        return Multigraph(self.vertices, tuple(e for e in self.edges if e.id in chosen), self.name)

    def contract_edges(self, edge_ids: Iterable[EdgeId]) -> "Multigraph":
        """G/H: collapse every component of the spanning subgraph H to its first vertex."""
        chosen = frozenset(edge_ids)
        representative: Dict[Vertex, Vertex] = {}
        for component in self.spanning_subgraph(chosen).components:
            head = next(v for v in self.vertices if v in component)
            for v in component:
                representative[v] = head
        edges = tuple(
            Edge(e.id, representative[e.origin], representative[e.endpoint]) for e in self.edges if e.id not in chosen
        )
        vertices = tuple(v for v in self.vertices if representative[v] == v)
        return Multigraph(vertices, edges, f"{self.name}/H")

    def is_isthmus(self, edge_id: EdgeId) -> bool:
        target = self.edge(edge_id)
        return not target.is_loop and self.delete_edge(edge_id).component_count > self.component_count

    def reversed_edge(self, edge_id: EdgeId) -> "Multigraph":
        edges = tuple(Edge(e.id, e.endpoint, e.origin) if e.id == edge_id else e for e in self.edges)
        return Multigraph(self.vertices, edges, self.name)


def graph_rank(g: Multigraph, edge_ids: Iterable[EdgeId]) -> int:
    """r(A) = |V| - |K(A)| for the spanning subgraph on A."""
    return len(g.vertices) - g.spanning_subgraph(edge_ids).component_count


def graph_rank_oracle(g: Multigraph, validate: bool = False) -> RankOracleMatroid:
    return RankOracleMatroid(g.edge_ids, lambda subset: graph_rank(g, subset), name=g.name, validate=validate)


def incidence_matrix(g: Multigraph, field: Field) -> FqMatrix:
    """-1 at the origin, 1 at the endpoint; loop columns are zero."""
    values = []
    for v in g.vertices:
        row = []
        for e in g.edges:
            if e.is_loop:
                row.append(0)
            elif v == e.origin:
                row.append(-1)
            elif v == e.endpoint:
                row.append(1)
            else:
                row.append(0)
        values.append(row)
    return FqMatrix.from_values(field, values, row_labels=g.vertices, col_labels=g.edge_ids, cols=len(g.edges))


def cycle_matroid(g: Multigraph, field: Field) -> RepMatroid:
    return RepMatroid(incidence_matrix(g, field), name=g.name)


def count_proper_colorings(g: Multigraph, q: int, budget: Optional[int] = None) -> int:
    if g.has_loops():
        return 0
    ensure_within_budget(q ** len(g.vertices), budget, f"{q}-colorings of {g.name or 'graph'}")
    index = {v: i for i, v in enumerate(g.vertices)}
    pairs = [(index[e.origin], index[e.endpoint]) for e in g.edges]
    return sum(
        1
        for colors in itertools.product(range(q), repeat=len(g.vertices))
        if all(colors[i] != colors[j] for i, j in pairs)
    )


def chromatic_poly(g: Multigraph, budget: Optional[int] = None) -> UniPoly:
    """P_G interpolated from coloring counts at q = 0..|V|."""
    points = [(q, count_proper_colorings(g, q, budget)) for q in range(len(g.vertices) + 1)]
    return UniPoly.interpolate(points)


def chromatic_poly_from_matroid(g: Multigraph, budget: Optional[int] = None) -> UniPoly:
    """q^|K(G)| chi_{M(G)}(q)."""
    shift = UniPoly((0,) * g.component_count + (1,))
    return shift * char_poly(graph_rank_oracle(g), budget)


def flow_poly(g: Multigraph, budget: Optional[int] = None) -> UniPoly:
    """F_G = chi of the dual of the cycle matroid."""
    return char_poly(graph_rank_oracle(g).dual(), budget)


def _conservation_rows(g: Multigraph) -> List[List[Tuple[int, int]]]:
    columns = {e.id: j for j, e in enumerate(g.edges)}
    rows = []
    for v in g.vertices:
        row = []
        for e in g.edges:
            if e.is_loop:
                continue
            if v == e.origin:
                row.append((columns[e.id], -1))
            elif v == e.endpoint:
                row.append((columns[e.id], 1))
        rows.append(row)
    return rows


def count_nowhere_zero_flows(g: Multigraph, q: int, budget: Optional[int] = None) -> int:
    """Assignments of nonzero residues mod q to edges with zero net flow at every vertex."""
    ensure_within_budget((q - 1) ** len(g.edges), budget, f"{q}-flows of {g.name or 'graph'}")
    rows = _conservation_rows(g)
    return sum(
        1
        for k in itertools.product(range(1, q), repeat=len(g.edges))
        if all(sum(sign * k[j] for j, sign in row) % q == 0 for row in rows)
    )


def _propagator_product(delta_counts: Counter, edges: int, a: Number, b: Number) -> Fraction:
    """Sum of a^(|E|-k) (a+b)^k weighted by how many states have k vanishing arguments."""
    a, b = Fraction(a), Fraction(b)
    return sum((count * a ** (edges - k) * (a + b) ** k for k, count in delta_counts.items()), Fraction(0))


def _check_q(q: int) -> None:
    if not isinstance(q, int) or q < 2:
        raise InvalidQ(f"amplitudes need an integer q >= 2, got {q!r}")


def vacuum_fa_coordinate(
    g: Multigraph, q: int, a: Number, b: Number, budget: Optional[int] = None, reduced: bool = False
) -> Fraction:
    """sum over x in (Z/q)^V of prod_e (a + b*delta(x_i(e) - x_f(e))).

    With reduced set, one vertex per component is pinned to 0, which divides the
    sum by q^|K(G)|.
    """
    _check_q(q)
    pinned = {next(v for v in g.vertices if v in c) for c in g.components} if reduced else set()
    free = [v for v in g.vertices if v not in pinned]
    ensure_within_budget(q ** len(free), budget, f"coordinate amplitude of {g.name or 'graph'}")
    position = {v: i for i, v in enumerate(free)}
    loops = sum(1 for e in g.edges if e.is_loop)
    links = [(position.get(e.origin), position.get(e.endpoint)) for e in g.edges if not e.is_loop]
    delta_counts: Counter = Counter()
    for x in itertools.product(range(q), repeat=len(free)):
        hits = loops
        for i, j in links:
            xi = 0 if i is None else x[i]
            xj = 0 if j is None else x[j]
            if xi == xj:
                hits += 1
        delta_counts[hits] += 1
    return _propagator_product(delta_counts, len(g.edges), a, b)


def vacuum_fa_momentum(g: Multigraph, q: int, a: Number, b: Number, budget: Optional[int] = None) -> Fraction:
    """sum over k in (Z/q)^E of prod_e (a + b*delta(k_e)) times momentum conservation at every vertex."""
    _check_q(q)
    ensure_within_budget(q ** len(g.edges), budget, f"momentum amplitude of {g.name or 'graph'}")
    rows = _conservation_rows(g)
    delta_counts: Counter = Counter()
    for k in itertools.product(range(q), repeat=len(g.edges)):
        if all(sum(sign * k[j] for j, sign in row) % q == 0 for row in rows):
            delta_counts[k.count(0)] += 1
    return _propagator_product(delta_counts, len(g.edges), a, b)


def fourier_duality_check(g: Multigraph, q: int, a: Number, b: Number, budget: Optional[int] = None) -> bool:
    """q^|V| * momentum(a, b) == coordinate(b, a*q)."""
    lhs = q ** len(g.vertices) * vacuum_fa_momentum(g, q, a, b, budget)
    rhs = vacuum_fa_coordinate(g, q, b, Fraction(a) * q, budget)
    return lhs == rhs


def deletion_contraction_sides(
    g: Multigraph, edge_id: EdgeId, q: int, a: Number, b: Number, space: str = "coordinate", budget: Optional[int] = None
) -> Tuple[Fraction, Fraction]:
    """Coordinate: F_G = a F_{G-e} + b F_{G/e}. Momentum: F_G = b F_{G-e} + a F_{G/e}."""
    target = g.edge(edge_id)
    if target.is_loop or g.is_isthmus(edge_id):
        raise LoopOrIsthmus(f"edge {edge_id} of {g.name or 'graph'} is a loop or an isthmus")
    deleted, contracted = g.delete_edge(edge_id), g.contract_edge(edge_id)
    a, b = Fraction(a), Fraction(b)
    if space == "coordinate":
        whole = vacuum_fa_coordinate(g, q, a, b, budget)
        split = a * vacuum_fa_coordinate(deleted, q, a, b, budget) + b * vacuum_fa_coordinate(contracted, q, a, b, budget)
    elif space == "momentum":
        whole = vacuum_fa_momentum(g, q, a, b, budget)
        split = b * vacuum_fa_momentum(deleted, q, a, b, budget) + a * vacuum_fa_momentum(contracted, q, a, b, budget)
    else:
        raise ValueError(f"unknown amplitude space {space!r}")
    return whole, split


def deletion_contraction_check(
    g: Multigraph, edge_id: EdgeId, q: int, a: Number, b: Number, space: str = "coordinate", budget: Optional[int] = None
) -> bool:
    whole, split = deletion_contraction_sides(g, edge_id, q, a, b, space, budget)
    return whole == split


def dichromatic_poly(g: Multigraph, budget: Optional[int] = None) -> BiPoly:
    """Q_G(u, v) = sum over A of u^|K(A)| v^(|A| - |V| + |K(A)|)."""
    terms: Dict[Tuple[int, int], int] = {}
    n = len(g.vertices)
    for subset in subsets(g.edge_ids, budget, "dichromatic polynomial"):
        k = g.spanning_subgraph(subset).component_count
        key = (k, len(subset) - n + k)
        terms[key] = terms.get(key, 0) + 1
    return BiPoly.from_dict(terms)


def fa_closed_form_sides(
    g: Multigraph, q: int, a: Number, b: Number, space: str = "coordinate", budget: Optional[int] = None
) -> Tuple[Fraction, Fraction]:
    """(amplitude by enumeration, amplitude from the dichromatic polynomial)."""
    if a == 0 or b == 0:
        raise ZeroPropagatorConstant("closed forms need a != 0 and b != 0")
    a, b = Fraction(a), Fraction(b)
    n_vertices, n_edges = len(g.vertices), len(g.edges)
    q_poly = dichromatic_poly(g, budget)
    if space == "coordinate":
        closed = a ** (n_edges - n_vertices) * b**n_vertices * q_poly(q * a / b, b / a)
        return vacuum_fa_coordinate(g, q, a, b, budget), closed
    if space == "momentum":
        closed = a**n_vertices * b ** (n_edges - n_vertices) * q_poly(b / a, q * a / b)
        return vacuum_fa_momentum(g, q, a, b, budget), closed
    raise ValueError(f"unknown amplitude space {space!r}")


def fa_closed_form_check(
    g: Multigraph, q: int, a: Number, b: Number, space: str = "coordinate", budget: Optional[int] = None
) -> bool:
    """Amplitudes against their dichromatic-polynomial closed forms."""
    enumerated, closed = fa_closed_form_sides(g, q, a, b, space, budget)
    return enumerated == closed


def bad_coloring_poly(g: Multigraph, budget: Optional[int] = None) -> BiPoly:
    """Coordinate amplitude with a = 1, b = x - 1, as a polynomial in (q, x)."""
    terms: Counter = Counter()
    for subset in subsets(g.edge_ids, budget, "bad coloring polynomial"):
        terms[(g.spanning_subgraph(subset).component_count, len(subset))] += 1
    return _expand_x_minus_one(terms)


def bad_flow_poly(g: Multigraph, budget: Optional[int] = None) -> BiPoly:
    """Momentum amplitude with a = 1, b = x - 1, as a polynomial in (q, x)."""
    terms: Counter = Counter()
    n_vertices, n_edges = len(g.vertices), len(g.edges)
    for subset in subsets(g.edge_ids, budget, "bad flow polynomial"):
        k = g.spanning_subgraph(subset).component_count
        terms[(len(subset) - n_vertices + k, n_edges - len(subset))] += 1
    return _expand_x_minus_one(terms)


def _expand_x_minus_one(terms: Counter) -> BiPoly:
    """sum of count * q^i (x - 1)^j from a table keyed by (i, j)."""
    total = BiPoly()
    for (i, j), count in terms.items():
        total = total + BiPoly.from_dict({(i, j): count}).shift(0, -1)
    return total


def fa_rescaling_check(g: Multigraph, q: int, a: Number, b: Number, budget: Optional[int] = None) -> bool:
    """Both amplitudes equal a^|E| times the bad polynomials at x = 1 + b/a."""
    if a == 0:
        raise ZeroPropagatorConstant("rescaling needs a != 0")
    a, b = Fraction(a), Fraction(b)
    x = 1 + b / a
    scale = a ** len(g.edges)
    coordinate_ok = vacuum_fa_coordinate(g, q, a, b, budget) == scale * bad_coloring_poly(g, budget)(q, x)
    momentum_ok = vacuum_fa_momentum(g, q, a, b, budget) == scale * bad_flow_poly(g, budget)(q, x)
    return coordinate_ok and momentum_ok


def _zeta(q: int, z: int) -> Fraction:
    return 1 / (1 - Fraction(q) ** -z)


def flow_contraction_polys(g: Multigraph, budget: Optional[int] = None) -> Tuple[UniPoly, UniPoly]:
    """(x^|V| F_G(x), sum over H of (-1)^(|E|-|H|) (x-1)^|H| P_{G/H}(x)) as exact polynomials."""
    n_edges = len(g.edges)
    x_minus_one = UniPoly((-1, 1))
    rhs = UniPoly()
    for subset in subsets(g.edge_ids, budget, "contraction expansion"):
        quotient = g.contract_edges(subset)
        if quotient.has_loops():
            continue
        term = chromatic_poly(quotient, budget)
        for _ in range(len(subset)):
            term = term * x_minus_one
        rhs = rhs + term * (-1) ** (n_edges - len(subset))
    lhs = UniPoly((0,) * len(g.vertices) + (1,)) * flow_poly(g, budget)
    return lhs, rhs


def graph_identity_checks(g: Multigraph, q: int, budget: Optional[int] = None) -> List[IdentityReport]:
    """The three flow/chromatic subgraph expansions, evaluated exactly at one q."""
    if not isinstance(q, int) or q < 2:
        raise InvalidQ(f"the zeta factors have poles at q = 1; got q = {q!r}")
    n_vertices, n_edges = len(g.vertices), len(g.edges)
    zeta_plus, zeta_minus = _zeta(q, 1), _zeta(q, -1)
    flow_g = flow_poly(g, budget)(q)
    chromatic_g = chromatic_poly(g, budget)(q)

    restriction_sum = Fraction(0)
    dual_sum = Fraction(0)
    for subset in subsets(g.edge_ids, budget, "graph identities"):
        sub = g.spanning_subgraph(subset)
        size = len(subset)
        restriction_sum += (-1) ** (n_edges - size) * chromatic_poly(sub, budget)(q) / q**n_vertices * zeta_plus**size
        dual_sum += zeta_minus**size * flow_poly(sub, budget)(q)
    contraction_lhs, contraction_rhs = flow_contraction_polys(g, budget)

    subject = g.name or "graph"
    return [
        IdentityReport("graph-zeta-restriction", subject, (q,), (flow_g * zeta_minus**n_edges,), (restriction_sum,)),
        IdentityReport("graph-zeta-dual", subject, (q,), (chromatic_g / q**n_vertices * zeta_plus**n_edges,), (dual_sum,)),
        IdentityReport("graph-contraction-sum", subject, (q,), (contraction_lhs(q),), (contraction_rhs(q),)),
    ]
