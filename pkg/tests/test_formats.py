#!/usr/bin/env python3
import pytest

from qmatroid.errors import FieldMismatch, ParseError
from qmatroid.finite_field import field_for_order, prime_field
from qmatroid.formats import (
    dump_graph,
    dump_matroid,
    load_graph,
    load_matroid,
    parse_graph_text,
    parse_matroid_text,
    sniff_kind,
)
from qmatroid.matroid_core import RankOracleMatroid, same_rank_function

U24_TEXT = """\
# U(2,4)
matroid U24
field 5
rows 2 cols 4
1 0 1 1
0 1 1 -1   # last column is (1, -1)
labels 1 2 3 4
"""

C4_TEXT = """\
graph C4
vertices 4
edge 1 1 2
edge 2 2 3
edge 3 3 4
edge 4 4 1
"""


class TestMatroidFiles:

    def test_parse_matrix(self):
        source = parse_matroid_text(U24_TEXT)
        assert source.name == 'U24'
        assert source.kind == 'matrix'
        assert source.field == prime_field(5)
        m = source.represent(None)
        assert m.ground == (1, 2, 3, 4)
        assert m.full_rank == 2
        assert same_rank_function(source.oracle(), RankOracleMatroid.uniform(2, 4))

    def test_integer_matrix_without_field_line(self):
        source = parse_matroid_text('matroid M\nrows 1 cols 3\n1 2 0\n')
        assert source.field is None
        m = source.represent(prime_field(3))
        assert m.ground == (1, 2, 3)
        assert m.is_loop(3)
        with pytest.raises(ParseError):
            source.represent(None)

    def test_field_line_pins_the_field(self):
        source = parse_matroid_text(U24_TEXT)
        with pytest.raises(FieldMismatch):
            source.represent(prime_field(7))

    def test_extension_field_entries(self):
        source = parse_matroid_text('matroid M\nfield 3^2\nrows 1 cols 2\n1 0,1\n')
        m = source.represent(None)
        assert m.field == field_for_order(9)
        assert m.matrix[0, 1] == m.field.element([0, 1])

    def test_coefficient_tuples_need_a_field(self):
        with pytest.raises(ParseError) as excinfo:
            parse_matroid_text('matroid M\nrows 1 cols 2\n1 0,1\n')
        assert 'need a field line' in str(excinfo.value)

    def test_uniform_body(self):
        source = parse_matroid_text('matroid U\nuniform 2 3\nlabels a b c\n')
        m = source.oracle()
        assert m.name == 'U'
        assert m.ground == ('a', 'b', 'c')
        assert m.full_rank == 2
        assert source.represent(prime_field(5)) is None

    @pytest.mark.parametrize(
        'text, message',
        [
            ('matrix U24\n', 'first line'),
            ('matroid M\n', 'no body'),
            ('matroid M\nrows 2 cols 2\n1 0\n', 'expected 2 matrix rows'),
            ('matroid M\nrows 1 cols 2\n1 0 1\n', 'expected 2 entries'),
            ('matroid M\nrows 1 cols 2\n1 x\n', 'expected an integer'),
            ('matroid M\nuniform 3 2\n', '0 <= k <= n'),
            ('matroid M\nuniform 1 2\nlabels a a\n', 'duplicate labels'),
            ('matroid M\nuniform 1 2\nlabels a b\nextra\n', 'trailing content'),
            ('matroid M\nsparse 2\n', "expected 'rows"),
        ],
    )
    def test_malformed_matroid_files(self, text, message):
        with pytest.raises(ParseError) as excinfo:
            parse_matroid_text(text, 'm.txt')
        assert message in str(excinfo.value)

    def test_dump_reads_back(self):
        m = parse_matroid_text(U24_TEXT).represent(None)
        again = parse_matroid_text(dump_matroid(m)).represent(None)
        assert again.matrix == m.matrix
        assert again.ground == m.ground


class TestGraphFiles:

    def test_parse_graph(self):
        g = parse_graph_text(C4_TEXT)
        assert g.name == 'C4'
        assert g.vertices == (1, 2, 3, 4)
        assert g.edge_ids == (1, 2, 3, 4)
        assert dump_graph(g) == C4_TEXT

    @pytest.mark.parametrize(
        'text, message',
        [
            ('vertices 2\n', 'first line'),
            ('graph G\nedge 1 1 2\n', 'second line'),
            ('graph G\nvertices 2\nedge 1 1\n', "expected 'edge"),
            ('graph G\nvertices 2\nedge 1 1 3\n', 'out of range'),
            ('graph G\nvertices 2\nedge 1 1 2\nedge 1 2 1\n', 'duplicate edge ids'),
        ],
    )
    def test_malformed_graph_files(self, text, message):
        with pytest.raises(ParseError) as excinfo:
            parse_graph_text(text)
        assert message in str(excinfo.value)


class TestFiles:

    def test_graphic_matroid_reads_its_graph_next_to_it(self, tmp_path):
        (tmp_path / 'c4.graph').write_text(C4_TEXT)
        (tmp_path / 'c4.matroid').write_text('matroid C4\ngraphic c4.graph\n')
        source = load_matroid(str(tmp_path / 'c4.matroid'))
        assert source.kind == 'graphic'
        assert source.oracle().full_rank == 3
        assert source.represent(prime_field(3)).full_rank == 3
        assert sniff_kind(str(tmp_path / 'c4.matroid')) == 'matroid'
        assert sniff_kind(str(tmp_path / 'c4.graph')) == 'graph'

    def test_unreadable_files(self, tmp_path):
        with pytest.raises(ParseError):
            load_graph(str(tmp_path / 'missing.graph'))
        (tmp_path / 'notes.txt').write_text('hello\n')
        with pytest.raises(ParseError):
            sniff_kind(str(tmp_path / 'notes.txt'))
