#!/usr/bin/env python3
import json
from fractions import Fraction

import pytest

from qmatroid.errors import ParseError
from qmatroid.report import REPORT_HEADER, IdentityReport, parse_structured, render_structured, render_text


def _reports():
    return [
        IdentityReport('theorem1', 'U24', (5, 7), (Fraction(8), Fraction(24)), (Fraction(8), Fraction(24)), notes=('r* histogram: {0: 4}',)),
        IdentityReport('zeta-restriction', 'U24', (3,), (Fraction(-1, 2),), (Fraction(1, 2),)),
        IdentityReport('tutte-convolution', 'U24', (0,), ('x^2 + y',), ('x^2 + y',)),
    ]


class TestIdentityReport:

    def test_verdicts(self):
        passed, mismatch, symbolic = _reports()
        assert passed.passed
        assert not mismatch.passed
        assert symbolic.passed

    def test_degree_bound_needs_enough_points(self):
        report = IdentityReport('dual-char-restriction', 'LOOP', (2, 3), (1, 2), (1, 2), degree_bound=2)
        assert not report.passed
        assert IdentityReport('x', 'M', (2, 3, 4), (1, 2, 3), (1, 2, 3), degree_bound=2).passed

    def test_no_points_never_passes(self):
        assert not IdentityReport('x', 'M', (), (), ()).passed

    def test_lengths_must_agree(self):
        with pytest.raises(ValueError):
            IdentityReport('x', 'M', (2, 3), (1,), (1, 2))

    def test_with_notes(self):
        report = _reports()[1].with_notes('first', 'second')
        assert report.notes == ('first', 'second')
        assert report.lhs == (Fraction(-1, 2),)


class TestRendering:

    def test_render_text(self):
        lines = render_text(_reports()[:2])
        assert lines == [
            'PASS theorem1 [U24]',
            '  q=5: 8 = 8',
            '  q=7: 24 = 24',
            '  note: r* histogram: {0: 4}',
            'FAIL zeta-restriction [U24]',
            '  q=3: -1/2 != 1/2',
        ]

    def test_render_text_reports_missing_points(self):
        report = IdentityReport('dual-char-restriction', 'LOOP', (2, 3), (1, 2), (1, 2), degree_bound=2)
        assert render_text([report])[-1] == '  only 2 points for degree bound 2'

    def test_structured_records(self):
        lines = render_structured(_reports())
        assert lines[0] == REPORT_HEADER
        assert len(lines) == 5
        first = json.loads(lines[1])
        assert first['identity'] == 'theorem1'
        assert first['lhs'] == '8'
        assert first['verdict'] == 'pass'
        assert first['notes'] == ['r* histogram: {0: 4}']
        assert 'notes' not in json.loads(lines[2])
        assert json.loads(lines[3])['verdict'] == 'fail'

    def test_structured_reports_read_back(self):
        assert parse_structured(render_structured(_reports())) == _reports()

    def test_empty_report_survives_a_round_trip(self):
        reports = [IdentityReport('critical-kernel-count', 'U24', (), (), ()), _reports()[0]]
        lines = render_structured(reports)
        assert len(lines) == 4
        empty = json.loads(lines[1])
        assert empty['point'] is None
        assert empty['lhs'] is None
        assert empty['verdict'] == 'fail'
        assert parse_structured(lines) == reports

    def test_parse_needs_the_header(self):
        with pytest.raises(ParseError):
            parse_structured(['{"identity": "theorem1"}'])
        with pytest.raises(ParseError):
            parse_structured([])

    def test_parse_rejects_malformed_records(self):
        with pytest.raises(ParseError) as excinfo:
            parse_structured([REPORT_HEADER, 'not json'])
        assert 'line 2' in str(excinfo.value)
        with pytest.raises(ParseError):
            parse_structured([REPORT_HEADER, '{"identity": "theorem1"}'])
