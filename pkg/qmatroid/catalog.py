"""Named test subjects: small uniform, graphic and degenerate matroids."""

import os
import re
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from .errors import ParseError, RepresentationCollapse
from .finite_field import Field
from .formats import MatroidSource, load_graph, load_matroid, sniff_kind
from .graph_fa import Multigraph, cycle_matroid, graph_rank_oracle
from .kontsevich import u24_matrix, u24_represents_uniform
from .linalg_fq import FqMatrix
from .matroid_core import Matroid, RankOracleMatroid, RepMatroid

MAX_UNIFORM_SIZE = 6


@dataclass
class Subject:
    """A catalog entry or input file.

    oracle builds a field-free rank-oracle matroid, represent builds a
    represented matroid over a given field (None when no representation is
    known), graph is set for graphic subjects and field for files that declare
    the field they live in.
    """

    name: str
    description: str
    oracle: Callable[..., Matroid]
    represent: Optional[Callable[[Field], RepMatroid]] = None
    graph: Optional[Multigraph] = None
    field: Optional[Field] = None

    def matroid(self, field: Optional[Field] = None, validate: bool = False) -> Matroid:
        if field is not None and self.represent is not None:
            return self.represent(field)
        return self.oracle(validate=validate)


def _graph(name: str, n: int, edges) -> Multigraph:
    return Multigraph.build(range(1, n + 1), edges, name)


GRAPHS: Dict[str, Multigraph] = {
    "K2": _graph("K2", 2, [(1, 1, 2)]),
    "K3": _graph("K3", 3, [(1, 1, 2), (2, 2, 3), (3, 3, 1)]),
    "K4": _graph("K4", 4, [(1, 1, 2), (2, 1, 3), (3, 1, 4), (4, 2, 3), (5, 2, 4), (6, 3, 4)]),
    "C4": _graph("C4", 4, [(1, 1, 2), (2, 2, 3), (3, 3, 4), (4, 4, 1)]),
    "THETA": _graph("THETA", 4, [(1, 1, 4), (2, 1, 2), (3, 2, 4), (4, 1, 3), (5, 3, 4)]),
    "K3+LOOP": _graph("K3+LOOP", 3, [(1, 1, 2), (2, 2, 3), (3, 3, 1), (4, 1, 1)]),
    "K3+BRIDGE": _graph("K3+BRIDGE", 4, [(1, 1, 2), (2, 2, 3), (3, 3, 1), (4, 3, 4)]),
}

_GRAPH_DESCRIPTIONS = {
    "K2": "single edge (a coloop)",
    "K3": "triangle",
    "K4": "complete graph on four vertices",
    "C4": "4-cycle",
    "THETA": "theta graph: three internally disjoint paths of lengths 1, 2, 2",
    "K3+LOOP": "triangle with a loop at vertex 1",
    "K3+BRIDGE": "triangle with a pendant edge",
}


def uniform_representation(k: int, n: int, field: Field) -> RepMatroid:
    """Vandermonde columns (1, a, ..., a^(k-1)) for the first n field elements."""
    if n > field.q:
        raise RepresentationCollapse(f"U({k},{n}) has no Vandermonde representation over {field}: n > q")
    points = field.elements()[:n]
    values = [[a**i for a in points] for i in range(k)]
    return RepMatroid(FqMatrix.from_values(field, values, cols=n), name=f"U{k}{n}")


def _uniform_subject(k: int, n: int) -> Subject:
    if not 0 <= k <= n <= MAX_UNIFORM_SIZE:
        raise ParseError(f"uniform matroids in the catalog need 0 <= k <= n <= {MAX_UNIFORM_SIZE}")
    return Subject(
        f"U{k}{n}",
        f"uniform matroid U({k},{n})",
        lambda validate=False: RankOracleMatroid.uniform(k, n, validate=validate),
        lambda field: uniform_representation(k, n, field),
    )


def _u24_representation(field: Field) -> RepMatroid:
    if not u24_represents_uniform(field):
        raise RepresentationCollapse(f"the U24 matrix does not represent U(2,4) over {field}")
    return RepMatroid(u24_matrix(field), name="U24")


def _loops(k: int) -> Subject:
    def oracle(validate=False):
        return RankOracleMatroid(range(1, k + 1), lambda subset: 0, name=f"LOOPS{k}", validate=validate)

    def represent(field):
        return RepMatroid(FqMatrix.from_values(field, [], cols=k), name=f"LOOPS{k}")

    return Subject(f"LOOPS{k}", f"rank-0 matroid of {k} loops", oracle, represent)


def _graph_subject(name: str) -> Subject:
    g = GRAPHS[name]
    return Subject(
        name,
        _GRAPH_DESCRIPTIONS[name],
        lambda validate=False: graph_rank_oracle(g, validate=validate),
        lambda field: cycle_matroid(g, field),
        g,
    )


def _fixed_subjects() -> Dict[str, Subject]:
    subjects = {
        "U24": Subject(
            "U24",
            "U(2,4) with columns (1,0), (0,1), (1,1), (1,-1)",
            lambda validate=False: RankOracleMatroid.uniform(2, 4, validate=validate),
            _u24_representation,
        ),
        "LOOP": Subject(
            "LOOP",
            "single loop",
            lambda validate=False: RankOracleMatroid((1,), lambda subset: 0, name="LOOP", validate=validate),
            lambda field: RepMatroid(FqMatrix.from_values(field, [[0]]), name="LOOP"),
        ),
        "COLOOP": Subject(
            "COLOOP",
            "single coloop",
            lambda validate=False: RankOracleMatroid((1,), lambda subset: len(subset), name="COLOOP", validate=validate),
            lambda field: RepMatroid(FqMatrix.from_values(field, [[1]]), name="COLOOP"),
        ),
    }
    subjects.update({name: _graph_subject(name) for name in GRAPHS})
    return subjects


def catalog_entries() -> List[Subject]:
    """Fixed entries plus a few representatives of the parametrised families."""
    entries = list(_fixed_subjects().values())
    entries.extend([_uniform_subject(3, 6), _loops(2)])
    return entries


def _file_subject(path: str, max_field_size: int) -> Subject:
    if sniff_kind(path) == "graph":
        g = load_graph(path)
        return Subject(
            g.name,
            f"graph from {path}",
            lambda validate=False: graph_rank_oracle(g, validate=validate),
            lambda field: cycle_matroid(g, field),
            g,
        )
    source: MatroidSource = load_matroid(path, max_field_size)
    represent = source.represent if source.kind in ("matrix", "graphic") else None
    return Subject(source.name, f"matroid from {path}", source.oracle, represent, source.graph, source.field)


def resolve_subject(text: str, max_field_size: int = 10_000) -> Subject:
    """A catalog name (U24, U36, K4, LOOPS3, ...) or a path to a matroid or graph file."""
    if os.path.isfile(text):
        return _file_subject(text, max_field_size)
    name = text.upper()
    fixed = _fixed_subjects()
    if name in fixed:
        return fixed[name]
    match = re.fullmatch(r"U(\d)(\d)", name)
    if match:
        return _uniform_subject(int(match.group(1)), int(match.group(2)))
    match = re.fullmatch(r"LOOPS(\d+)", name)
    if match:
        return _loops(int(match.group(1)))
    raise ParseError(f"unknown subject {text!r}: not a file and not in the catalog")
