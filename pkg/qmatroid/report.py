"""Verification reports and their text and structured (JSON lines) renderings."""

import json
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .errors import ParseError

REPORT_HEADER = "qmatroid-report v1"

Value = Union[Fraction, str]


def _encode(value: Value) -> str:
    return str(value)


def _decode(text: str) -> Value:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        return text


@dataclass(frozen=True)
class IdentityReport:
    """Left and right sides of one identity at a list of evaluation points.

    degree_bound is the largest degree either side can have as a polynomial in the
    point; None marks pointwise checks, which pass on agreement alone.
    """

    identity: str
    matroid: str
    points: Tuple[int, ...]
    lhs: Tuple[Value, ...]
    rhs: Tuple[Value, ...]
    degree_bound: Optional[int] = None
    notes: Tuple[str, ...] = dataclass_field(default=())

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "lhs", tuple(self.lhs))
        object.__setattr__(self, "rhs", tuple(self.rhs))
        object.__setattr__(self, "notes", tuple(self.notes))
        if not len(self.points) == len(self.lhs) == len(self.rhs):
            raise ValueError("points, lhs and rhs must have equal lengths")

    @property
    def passed(self) -> bool:
        if not self.points:
            return False
        if any(left != right for left, right in zip(self.lhs, self.rhs)):
            return False
        return self.degree_bound is None or len(self.points) > self.degree_bound

    def with_notes(self, *notes: str) -> "IdentityReport":
        return IdentityReport(
            self.identity, self.matroid, self.points, self.lhs, self.rhs, self.degree_bound, self.notes + notes
        )


def render_text(reports: Iterable[IdentityReport]) -> List[str]:
    lines = []
    for report in reports:
        verdict = "PASS" if report.passed else "FAIL"
        lines.append(f"{verdict} {report.identity} [{report.matroid}]")
        for point, left, right in zip(report.points, report.lhs, report.rhs):
            marker = "=" if left == right else "!="
            lines.append(f"  q={point}: {left} {marker} {right}")
        if report.degree_bound is not None and len(report.points) <= report.degree_bound:
            lines.append(f"  only {len(report.points)} points for degree bound {report.degree_bound}")
        for note in report.notes:
            lines.append(f"  note: {note}")
    return lines


def render_structured(reports: Iterable[IdentityReport]) -> List[str]:
    """Header line, then one JSON object per identity, subject and point.

    A report without points still gets one record, with null point and sides.
    """
    lines = [REPORT_HEADER]
    for number, report in enumerate(reports):
        rows = list(zip(report.points, report.lhs, report.rhs)) or [(None, None, None)]
        for index, (point, left, right) in enumerate(rows):
            record = {
                "report": number,
                "identity": report.identity,
                "matroid": report.matroid,
                "point": point,
                "lhs": None if left is None else _encode(left),
                "rhs": None if right is None else _encode(right),
                "degree_bound": report.degree_bound,
                "verdict": "pass" if report.passed else "fail",
            }
            if index == 0 and report.notes:
                record["notes"] = list(report.notes)
            lines.append(json.dumps(record, sort_keys=True))
    return lines


def parse_structured(lines: Sequence[str]) -> List[IdentityReport]:
    """Inverse of render_structured; consecutive records of one identity are regrouped."""
    lines = [line for line in lines if line.strip()]
    if not lines or lines[0].strip() != REPORT_HEADER:
        raise ParseError(f"structured report must start with {REPORT_HEADER!r}")
    groups: list = []
    current = None
    for number, line in enumerate(lines[1:], start=2):
        try:
            record = json.loads(line)
            key = (record["report"], record["identity"], record["matroid"], record["degree_bound"])
            point = record["point"]
            if point is not None:
                point, left, right = int(point), _decode(record["lhs"]), _decode(record["rhs"])
        except (ValueError, KeyError, TypeError) as e:
            raise ParseError(f"line {number}: malformed report record") from e
        if current is None or current[0] != key:
            current = (key, [], [], [], list(record.get("notes", [])))
            groups.append(current)
        if point is None:
            continue
        current[1].append(point)
        current[2].append(left)
        current[3].append(right)
    return [
        IdentityReport(identity, matroid, tuple(points), tuple(lhs), tuple(rhs), bound, tuple(notes))
        for (_, identity, matroid, bound), points, lhs, rhs, notes in groups
    ]
