"""Verification suites behind ``qmatroid verify``.

Each suite turns a subject and a RunConfig into a list of IdentityReport; the CLI
renders them and maps the verdicts to an exit code.
"""

import logging
import random
import time
from dataclasses import replace
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from .catalog import Subject
from .config import RunConfig
from .errors import EnumerationBudgetExceeded, FieldMismatch, ParseError
from .finite_field import Field, field_for_order
from .graph_fa import (
    deletion_contraction_sides,
    fa_closed_form_sides,
    graph_identity_checks,
    vacuum_fa_coordinate,
    vacuum_fa_momentum,
)
from .identities import convolution_reports, theorem2_reports, zeta_reports
from .kontsevich import (
    alpha_vectors,
    brute_force_zero_count,
    chevalley_zero_count,
    direct_quadratic_form_distribution,
    lemma_chi,
    minimal_w_sets,
    nowhere_zero_kernel_count,
    quadratic_form_distribution,
    theorem1_census,
)
from .linalg_fq import FqMatrix
from .matroid_core import RepMatroid, char_poly
from .report import IdentityReport

logger = logging.getLogger(__name__)

SUITES = ("theorem1", "theorem2", "fourier", "chevalley", "convolution", "all")
CHEVALLEY_MAX_SIZE = 4
CHOICE_CHECK_MAX_RANK = 3
QUADRATIC_FORM_EXPONENTS = (1, 2, 3)
DIRECT_FORM_MAX_STATES = 100_000


def config_for_subject(subject: Optional[Subject], config: RunConfig) -> RunConfig:
    """Pin the field and q to the subject's own field, when its file declares one."""
    pinned = subject.field if subject is not None else None
    if pinned is None:
        return config
    if config.field is not None and config.field != pinned:
        raise FieldMismatch(f"{subject.name} is defined over {pinned}, not over the requested {config.field}")
    conflicting = [q for q in config.q_values if q != pinned.q]
    if config.q_from_flags and conflicting:
        raise FieldMismatch(
            f"{subject.name} is defined over {pinned}; q = {', '.join(map(str, conflicting))} "
            f"does not match its order {pinned.q}"
        )
    return replace(config, field=pinned, q_values=[pinned.q])


def _field_for(q: int, config: RunConfig) -> Field:
    if config.field is not None and config.field.q == q:
        return config.field
    return field_for_order(q, config.max_field_size)


def _represented(subject: Subject, field: Field) -> RepMatroid:
    if subject.represent is None:
        raise ParseError(f"{subject.name} has no representation over a field; theorem1 needs one")
    return subject.represent(field)


def _histogram_note(histogram) -> str:
    return "r* histogram: " + ", ".join(f"{n}: {count}" for n, count in sorted(histogram.items()))


def _choice_report(m: RepMatroid, q: int, budget: int) -> IdentityReport:
    """Alphas checked against alphas whose minimal W all give the same character."""
    checked = consistent = 0
    for alpha in alpha_vectors(m, budget):
        characters = {w.eta for w in minimal_w_sets(m, alpha)}
        checked += 1
        consistent += len(characters) == 1
    return IdentityReport("w-choice-independence", m.name, (q,), (Fraction(checked),), (Fraction(consistent),))


def _distribution_text(distribution) -> str:
    return ", ".join(f"{b}: {count}" for b, count in distribution.items())


def _form_methods_report(m: RepMatroid, q: int, exponents, budget: int) -> IdentityReport:
    """N_b(j) from support sizes against N_b(j) from every pair (x, alpha)."""
    shortcut, direct = [], []
    for j in exponents:
        shortcut.append(_distribution_text(quadratic_form_distribution(m, j, budget)))
        direct.append(_distribution_text(direct_quadratic_form_distribution(m, j, budget)))
    notes = (f"exponents j = {', '.join(map(str, exponents))}",)
    return IdentityReport("quadratic-form-pairs", m.name, (q,) * len(exponents), shortcut, direct, notes=notes)


def theorem1_suite(subject: Subject, config: RunConfig) -> List[IdentityReport]:
    """The alpha-sum against chi of the dual and its counting oracles, for every q."""
    reports = []
    for q in config.q_values:
        field = _field_for(q, config)
        m = _represented(subject, field)
        started = time.perf_counter()
        census = theorem1_census(m, config.budget, config.workers, config.oracle)
        expected = Fraction(int(char_poly(m.dual(), config.budget)(q)))
        total = census.total(config.g_convention)
        notes = [_histogram_note(census.histogram)]
        if total != expected:
            other = "cardinality" if config.g_convention == "characteristic" else "characteristic"
            notes.append(
                f"discrepancy: g(q, n) is the suspect term; the {other} sign convention gives {census.total(other)}"
            )
        reports.append(IdentityReport("theorem1", m.name, (q,), (expected,), (total,), notes=tuple(notes)))
        logger.info("theorem1 on %s over %s took %.2fs", m.name, field, time.perf_counter() - started)

        kernel = nowhere_zero_kernel_count(m, config.budget)
        reports.append(IdentityReport("critical-kernel-count", m.name, (q,), (expected,), (Fraction(kernel),)))

        pairs = q ** m.matrix.rows * (q - 1) ** len(m.ground)
        direct = pairs <= min(config.budget, DIRECT_FORM_MAX_STATES)
        exponents, values, skipped = [], [], []
        for j in QUADRATIC_FORM_EXPONENTS:
            try:
                values.append(lemma_chi(m, j, config.budget, direct=direct))
                exponents.append(j)
            except EnumerationBudgetExceeded:
                skipped.append(j)
        if exponents:
            method = "every pair (x, alpha)" if direct else "support sizes of xM"
            notes = [f"exponents j = {', '.join(map(str, exponents))}; counted from {method}"]
            if skipped:
                notes.append(f"skipped j = {', '.join(map(str, skipped))}: over budget")
            reports.append(
                IdentityReport(
                    "quadratic-form-count", m.name, (q,) * len(exponents), (expected,) * len(exponents), values, notes=tuple(notes)
                )
            )
        else:
            logger.warning("quadratic form counts for %s over %s exceed the budget; skipped", m.name, field)

        if exponents and direct:
            reports.append(_form_methods_report(m, q, exponents, config.budget))
        elif exponents:
            logger.info("direct quadratic form count for %s over %s skipped: %d pairs", m.name, field, pairs)

        if m.full_rank <= CHOICE_CHECK_MAX_RANK:
            reports.append(_choice_report(m, q, config.budget))
    return reports


def theorem2_suite(subject: Subject, config: RunConfig) -> List[IdentityReport]:
    """Both subset expansions of chi_{M*}, the zeta forms, and for graphs the flow expansions."""
    m = subject.matroid(validate=config.validate_oracles)
    reports = theorem2_reports(m, config.budget)
    reports.extend(zeta_reports(m, config.q_values, config.budget))
    if subject.graph is not None:
        for q in config.q_values:
            reports.extend(graph_identity_checks(subject.graph, q, config.budget))
    return reports


def fourier_suite(subject: Subject, config: RunConfig) -> List[IdentityReport]:
    """Fourier duality, deletion-contraction and the closed forms of the vacuum amplitudes."""
    g = subject.graph
    if g is None:
        raise ParseError(f"the fourier suite needs a graph; {subject.name} is not graphic")
    a, b = config.a, config.b
    name = g.name or subject.name
    notes = (f"propagator a = {a}, b = {b}",)
    reports = []
    for q in config.q_values:
        momentum = Fraction(q) ** len(g.vertices) * vacuum_fa_momentum(g, q, a, b, config.budget)
        coordinate = vacuum_fa_coordinate(g, q, b, a * q, config.budget)
        reports.append(IdentityReport("fourier-duality", name, (q,), (momentum,), (coordinate,), notes=notes))

        full = vacuum_fa_coordinate(g, q, a, b, config.budget)
        reduced = vacuum_fa_coordinate(g, q, a, b, config.budget, reduced=True)
        scaled = Fraction(q) ** g.component_count * reduced
        reports.append(IdentityReport("reduced-coordinate-amplitude", name, (q,), (full,), (scaled,), notes=notes))

        eligible = [e.id for e in g.edges if not e.is_loop and not g.is_isthmus(e.id)]
        for space in ("coordinate", "momentum"):
            if eligible:
                sides = [deletion_contraction_sides(g, e, q, a, b, space, config.budget) for e in eligible]
                reports.append(
                    IdentityReport(
                        f"deletion-contraction-{space}",
                        name,
                        (q,) * len(sides),
                        [whole for whole, _ in sides],
                        [split for _, split in sides],
                        notes=notes + (f"edges {', '.join(map(str, eligible))}",),
                    )
                )
            if a and b:
                enumerated, closed = fa_closed_form_sides(g, q, a, b, space, config.budget)
                reports.append(IdentityReport(f"closed-form-{space}", name, (q,), (enumerated,), (closed,), notes=notes))
    return reports


def _random_symmetric(field: Field, n: int, rng: random.Random) -> FqMatrix:
    elements = field.elements()
    values = [[field.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            values[i][j] = values[j][i] = elements[rng.randrange(field.q)]
    return FqMatrix.from_values(field, values)


def chevalley_suite(subject: Optional[Subject], config: RunConfig) -> List[IdentityReport]:
    """Zero counts of random symmetric forms: rank-and-minor formula against enumeration."""
    rng = random.Random(config.seed)
    reports = []
    for q in config.q_values:
        field = _field_for(q, config)
        for n in range(1, CHEVALLEY_MAX_SIZE + 1):
            agreeing, mismatches = 0, []
            for _ in range(config.chevalley_samples):
                b = _random_symmetric(field, n, rng)
                if chevalley_zero_count(b) == brute_force_zero_count(b, config.budget):
                    agreeing += 1
                elif len(mismatches) < 3:
                    mismatches.append(str(b))
            notes = tuple(f"mismatch: {text}" for text in mismatches)
            reports.append(
                IdentityReport(
                    "chevalley-count",
                    f"symmetric {n}x{n}",
                    (q,),
                    (Fraction(config.chevalley_samples),),
                    (Fraction(agreeing),),
                    notes=notes,
                )
            )
    return reports


def _kung_points(count: int, seed: int):
    """Random nonzero rational sample points (lam, xi, x, y)."""
    rng = random.Random(seed)
    points = []
    for _ in range(count):
        point = []
        for _ in range(4):
            numerator = rng.choice([n for n in range(-9, 10) if n])
            point.append(Fraction(numerator, rng.randint(1, 7)))
        points.append(tuple(point))
    return points


def convolution_suite(subject: Subject, config: RunConfig) -> List[IdentityReport]:
    m = subject.matroid(validate=config.validate_oracles)
    points = _kung_points(config.kung_points, config.seed)
    return convolution_reports(m, points, config.q_values, config.budget)


SUITE_RUNNERS: Dict[str, Callable[..., List[IdentityReport]]] = {
    "theorem1": theorem1_suite,
    "theorem2": theorem2_suite,
    "fourier": fourier_suite,
    "chevalley": chevalley_suite,
    "convolution": convolution_suite,
}


def run_suite(suite: str, subject: Optional[Subject], config: RunConfig) -> List[IdentityReport]:
    """Run one suite, or every suite that applies to the subject for "all"."""
    if suite not in SUITES:
        raise ParseError(f"unknown suite {suite!r}; expected one of {SUITES}")
    config = config_for_subject(subject, config)
    if suite == "chevalley":
        return chevalley_suite(subject, config)
    if subject is None:
        raise ParseError(f"the {suite} suite needs a subject")
    if suite != "all":
        return SUITE_RUNNERS[suite](subject, config)

    reports = []
    for name in ("theorem1", "theorem2", "fourier", "convolution"):
        if name == "theorem1" and subject.represent is None:
            logger.info("skipping theorem1 for %s: no representation", subject.name)
            continue
        if name == "fourier" and subject.graph is None:
            logger.info("skipping fourier for %s: not a graph", subject.name)
            continue
        reports.extend(SUITE_RUNNERS[name](subject, config))
    reports.extend(chevalley_suite(subject, config))
    return reports


def all_passed(reports: List[IdentityReport]) -> bool:
    return bool(reports) and all(report.passed for report in reports)
