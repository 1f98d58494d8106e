"""Text formats for matroids and graphs.

Matroid files::

    matroid U24
    field 5
    rows 2 cols 4
    1 0 1 1
    0 1 1 -1
    labels 1 2 3 4

The body may instead be ``uniform k n`` or ``graphic <graph file>``. Graph files::

    graph C4
    vertices 4
    edge 1 1 2

Blank lines and ``#`` comments are ignored everywhere.
"""

import logging
import os
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from .errors import FieldMismatch, ParseError
from .finite_field import DEFAULT_MAX_FIELD_SIZE, Field, parse_field_spec
from .graph_fa import Multigraph, cycle_matroid, graph_rank_oracle
from .linalg_fq import FqMatrix
from .matroid_core import Matroid, RankOracleMatroid, RepMatroid

logger = logging.getLogger(__name__)


def _label(token: str) -> Union[int, str]:
    try:
        return int(token)
    except ValueError:
        return token


def _lines(text: str) -> List[Tuple[int, List[str]]]:
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((number, line.split()))
    return out


def _int(token: str, source: str, number: int) -> int:
    try:
        return int(token)
    except ValueError as e:
        raise ParseError(f"{source}:{number}: expected an integer, got {token!r}") from e


@dataclass
class MatroidSource:
    """A parsed matroid file that can be (re)built over a field.

    Integer-only matrices without a field line can be read in any prime field;
    files with a field line are tied to that field.
    """

    name: str
    kind: str
    field: Optional[Field] = None
    tokens: Sequence[Sequence[str]] = ()
    cols: int = 0
    labels: Optional[Tuple] = None
    uniform: Optional[Tuple[int, int]] = None
    graph: Optional[Multigraph] = None

    def oracle(self, validate: bool = False) -> Matroid:
        if self.kind == "uniform":
            k, n = self.uniform
            m = RankOracleMatroid.uniform(k, n, self.labels, validate=validate)
            m.name = self.name
            return m
        if self.kind == "graphic":
            return graph_rank_oracle(self.graph, validate=validate)
        return self.represent(self.field).as_oracle()

    def represent(self, field: Optional[Field]) -> Optional[RepMatroid]:
        if self.kind == "graphic":
            return cycle_matroid(self.graph, field) if field is not None else None
        if self.kind != "matrix":
            return None
        if field is None:
            field = self.field
        if field is None:
            raise ParseError(f"matroid {self.name} has no field line; pass a field")
        if self.field is not None and field != self.field:
            raise FieldMismatch(f"matroid {self.name} is defined over {self.field}, not {field}")
        values = [[field.parse_element(token) for token in row] for row in self.tokens]
        matrix = FqMatrix.from_values(field, values, col_labels=self.labels, cols=self.cols)
        return RepMatroid(matrix, name=self.name)


def parse_matroid_text(text: str, source: str = "<string>", max_field_size: int = DEFAULT_MAX_FIELD_SIZE) -> MatroidSource:
    lines = _lines(text)
    if not lines or lines[0][1][0] != "matroid" or len(lines[0][1]) != 2:
        raise ParseError(f"{source}: first line must be 'matroid <name>'")
    name = lines[0][1][1]
    field: Optional[Field] = None
    rest = lines[1:]
    if rest and rest[0][1][0] == "field":
        number, words = rest[0]
        if len(words) != 2:
            raise ParseError(f"{source}:{number}: expected 'field <spec>'")
        field = parse_field_spec(words[1], max_field_size)
        rest = rest[1:]
    if not rest:
        raise ParseError(f"{source}: matroid {name} has no body")

    number, words = rest[0]
    keyword = words[0]
    if keyword == "uniform":
        if len(words) != 3:
            raise ParseError(f"{source}:{number}: expected 'uniform <k> <n>'")
        k, n = _int(words[1], source, number), _int(words[2], source, number)
        if not 0 <= k <= n:
            raise ParseError(f"{source}:{number}: uniform matroid needs 0 <= k <= n")
        labels = _parse_labels(rest[1:], n, source)
        return MatroidSource(name, "uniform", field, labels=labels, uniform=(k, n))
    if keyword == "graphic":
        if len(words) != 2:
            raise ParseError(f"{source}:{number}: expected 'graphic <graph file>'")
        path = words[1]
        if not os.path.isabs(path) and os.path.exists(source):
            path = os.path.join(os.path.dirname(os.path.abspath(source)), path)
        graph = load_graph(path)
        return MatroidSource(name, "graphic", field, graph=graph)
    if keyword != "rows" or len(words) != 4 or words[2] != "cols":
        raise ParseError(f"{source}:{number}: expected 'rows <r> cols <n>', 'uniform' or 'graphic'")

    r, n = _int(words[1], source, number), _int(words[3], source, number)
    body = rest[1 : 1 + r]
    if len(body) != r:
        raise ParseError(f"{source}: expected {r} matrix rows, found {len(body)}")
    tokens = []
    for row_number, row in body:
        if len(row) != n:
            raise ParseError(f"{source}:{row_number}: expected {n} entries, found {len(row)}")
        if field is None and any("," in token for token in row):
            raise ParseError(f"{source}:{row_number}: coefficient tuples need a field line")
        if field is not None:
            for token in row:
                field.parse_element(token)
        else:
            for token in row:
                _int(token, source, row_number)
        tokens.append(tuple(row))
    labels = _parse_labels(rest[1 + r :], n, source)
    logger.debug("Parsed %dx%d matroid %s from %s", r, n, name, source)
    return MatroidSource(name, "matrix", field, tuple(tokens), n, labels)


def _parse_labels(lines: Sequence[Tuple[int, List[str]]], n: int, source: str) -> Optional[Tuple]:
    if not lines:
        return None
    number, words = lines[0]
    if words[0] != "labels" or len(words) != n + 1:
        raise ParseError(f"{source}:{number}: expected 'labels' with {n} entries")
    if len(lines) > 1:
        raise ParseError(f"{source}:{lines[1][0]}: unexpected trailing content")
    labels = tuple(_label(w) for w in words[1:])
    if len(set(labels)) != len(labels):
        raise ParseError(f"{source}:{number}: duplicate labels")
    return labels


def parse_graph_text(text: str, source: str = "<string>") -> Multigraph:
    lines = _lines(text)
    if not lines or lines[0][1][0] != "graph" or len(lines[0][1]) != 2:
        raise ParseError(f"{source}: first line must be 'graph <name>'")
    name = lines[0][1][1]
    if len(lines) < 2 or lines[1][1][0] != "vertices" or len(lines[1][1]) != 2:
        raise ParseError(f"{source}: second line must be 'vertices <n>'")
    n = _int(lines[1][1][1], source, lines[1][0])
    vertices = tuple(range(1, n + 1))
    edges = []
    for number, words in lines[2:]:
        if words[0] != "edge" or len(words) != 4:
            raise ParseError(f"{source}:{number}: expected 'edge <id> <u> <v>'")
        u, v = _int(words[2], source, number), _int(words[3], source, number)
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"{source}:{number}: vertex out of range 1..{n}")
        edges.append((_label(words[1]), u, v))
    try:
        return Multigraph.build(vertices, edges, name)
    except ValueError as e:
        raise ParseError(f"{source}: {e}") from e


def _read(path: str) -> str:
    try:
        with open(path, "r") as f:
            return f.read()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e


def load_matroid(path: str, max_field_size: int = DEFAULT_MAX_FIELD_SIZE) -> MatroidSource:
    return parse_matroid_text(_read(path), path, max_field_size)


def load_graph(path: str) -> Multigraph:
    return parse_graph_text(_read(path), path)


def sniff_kind(path: str) -> str:
    """'matroid' or 'graph', from the first keyword of the file."""
    for _, words in _lines(_read(path)):
        if words[0] in ("matroid", "graph"):
            return words[0]
        break
    raise ParseError(f"{path}: not a matroid or graph file")


def dump_matroid(m: RepMatroid) -> str:
    lines = [f"matroid {m.name or 'M'}", f"field {m.field.spec}", f"rows {m.matrix.rows} cols {m.matrix.cols}"]
    lines.extend(" ".join(e.to_token() for e in row) for row in m.matrix.entries)
    lines.append("labels " + " ".join(str(e) for e in m.ground))
    return "\n".join(lines) + "\n"


def dump_graph(g: Multigraph) -> str:
    index = {v: i for i, v in enumerate(g.vertices, start=1)}
    lines = [f"graph {g.name or 'G'}", f"vertices {len(g.vertices)}"]
    lines.extend(f"edge {e.id} {index[e.origin]} {index[e.endpoint]}" for e in g.edges)
    return "\n".join(lines) + "\n"
