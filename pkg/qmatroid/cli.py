import argparse
import logging
import sys
from fractions import Fraction

from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.theme import Theme
from rich.traceback import install as install_rich_traceback

from . import catalog, config as run_config, demo, verify
from .__init__ import __version__
from .errors import EXIT_UNEXPECTED, ParseError, QMatroidError
from .graph_fa import chromatic_poly, dichromatic_poly, flow_poly
from .kontsevich import G_CONVENTIONS, W_ORACLES
from .matroid_core import char_poly, tutte_poly, whitney_rank_poly
from .report import render_structured, render_text

install_rich_traceback(show_locals=True)
custom_theme = Theme(
    {"info": "dim cyan", "warning": "magenta", "error": "bold red", "pass": "bold green", "fail": "bold red"}
)
console = Console(theme=custom_theme)

EXIT_OK = 0
EXIT_FAILED = 1
POLYNOMIALS = ("char", "tutte", "whitney", "chromatic", "flow", "dichromatic")
GRAPH_POLYNOMIALS = ("chromatic", "flow", "dichromatic")
DEMO_DEFAULT_Q = {"u24": 5, "c4": 3}


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-c", "--config", default=None, help="Run configuration file (default: qmatroid.yaml if present)")
    parser.add_argument("-v", "--verbose", action="store_true", help="Enable verbose output")
    parser.add_argument("--debug", action="store_true", help="Enable debug mode")
    parser.add_argument("--budget", type=int, help="Largest state space any single enumeration may visit")
    parser.add_argument("--workers", type=int, help="Worker processes for the alpha-sum")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Exact checks for GF(q)-linear matroids and finite Feynman amplitudes")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    # Polynomial command
    poly_parser = subparsers.add_parser("poly", help="Print a matroid or graph polynomial")
    poly_parser.add_argument("input", help="Matroid or graph file, or a catalog name")
    poly_parser.add_argument("which", choices=POLYNOMIALS, help="Polynomial to compute")
    poly_parser.add_argument("--field", help="Field for represented inputs, as p, p^d or p^d:c0,..,cd")
    _add_common(poly_parser)

    # Verify command
    verify_parser = subparsers.add_parser("verify", help="Run a verification suite")
    verify_parser.add_argument("suite", choices=verify.SUITES, help="Suite to run")
    verify_parser.add_argument("input", nargs="?", help="Matroid or graph file, or a catalog name")
    verify_parser.add_argument("--q", type=int, action="append", help="Evaluation point or field order (repeatable)")
    verify_parser.add_argument("--field", help="Field as p, p^d or p^d:c0,..,cd; its order is the default q")
    verify_parser.add_argument("--format", choices=run_config.OUTPUT_FORMATS, help="Report format")
    verify_parser.add_argument("--oracle", choices=W_ORACLES, help="How W* is found")
    verify_parser.add_argument("--g-convention", choices=G_CONVENTIONS, help="Sign rule of g(q, n)")
    verify_parser.add_argument("--seed", type=int, help="Seed for random sample points and matrices")
    verify_parser.add_argument("--a", type=Fraction, help="Propagator constant term (exact rational)")
    verify_parser.add_argument("--b", type=Fraction, help="Propagator delta coefficient (exact rational)")
    _add_common(verify_parser)

    # Demo command
    demo_parser = subparsers.add_parser("demo", help="Walk through a worked example")
    demo_parser.add_argument("which", choices=demo.DEMOS, help="Example to run")
    demo_parser.add_argument("--q", type=int, help="Field order (default 5 for u24, 3 for c4)")
    demo_parser.add_argument("--g-convention", choices=G_CONVENTIONS, help="Sign rule of g(q, n)")
    _add_common(demo_parser)

    # Catalog command
    subparsers.add_parser("catalog", help="List the named subjects")
    return parser


def _setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=console, rich_tracebacks=True, show_path=False)],
        force=True,
    )


def _run_config(args: argparse.Namespace) -> run_config.RunConfig:
    loaded = run_config.load_config(getattr(args, "config", None))
    flags = {
        "command": args.command,
        "inputs": [args.input] if getattr(args, "input", None) else [],
        "suite": getattr(args, "suite", None),
        "field_spec": getattr(args, "field", None),
        "budget": getattr(args, "budget", None),
        "workers": getattr(args, "workers", None),
        "output_format": getattr(args, "format", None),
        "oracle": getattr(args, "oracle", None),
        "g_convention": getattr(args, "g_convention", None),
        "seed": getattr(args, "seed", None),
        "a": getattr(args, "a", None),
        "b": getattr(args, "b", None),
    }
    q = getattr(args, "q", None)
    flags["q_values"] = [q] if isinstance(q, int) else q
    flags["q_from_flags"] = q is not None
    cfg = run_config.RunConfig.from_sources(loaded, **flags)
    if args.command == "verify" and q is None and getattr(args, "field", None):
        cfg.q_values = [cfg.field.q]
    return cfg


def cmd_poly(cfg: run_config.RunConfig, which: str) -> int:
    subject = catalog.resolve_subject(cfg.inputs[0], cfg.max_field_size)
    if which in GRAPH_POLYNOMIALS:
        if subject.graph is None:
            raise ParseError(f"the {which} polynomial needs a graph; {subject.name} is not graphic")
        if which == "chromatic":
            result = str(chromatic_poly(subject.graph, cfg.budget))
        elif which == "flow":
            result = str(flow_poly(subject.graph, cfg.budget))
        else:
            result = dichromatic_poly(subject.graph, cfg.budget).render(("u", "v"))
    else:
        m = subject.matroid(cfg.field if cfg.field is not None else subject.field, validate=cfg.validate_oracles)
        if which == "char":
            result = str(char_poly(m, cfg.budget))
        elif which == "tutte":
            result = tutte_poly(m, cfg.budget).render(("x", "y"))
        else:
            result = whitney_rank_poly(m, cfg.budget).render(("x", "y"))
    console.print(result, markup=False, highlight=False, soft_wrap=True)
    return EXIT_OK


def cmd_verify(cfg: run_config.RunConfig) -> int:
    subject = catalog.resolve_subject(cfg.inputs[0], cfg.max_field_size) if cfg.inputs else None
    reports = verify.run_suite(cfg.suite, subject, cfg)
    passed = verify.all_passed(reports)
    if cfg.output_format == "structured":
        for line in render_structured(reports):
            console.print(line, markup=False, highlight=False, soft_wrap=True)
    else:
        for line in render_text(reports):
            if line.startswith("PASS "):
                console.print(f"[pass]PASS[/pass] {escape(line[5:])}", highlight=False, soft_wrap=True)
            elif line.startswith("FAIL "):
                console.print(f"[fail]FAIL[/fail] {escape(line[5:])}", highlight=False, soft_wrap=True)
            else:
                console.print(line, markup=False, highlight=False, soft_wrap=True)
        good = sum(1 for report in reports if report.passed)
        style = "pass" if passed else "fail"
        console.print(f"[{style}]{good} of {len(reports)} checks passed[/{style}]")
    return EXIT_OK if passed else EXIT_FAILED


def cmd_demo(cfg: run_config.RunConfig, which: str, q: int) -> int:
    for line in demo.run_demo(which, q, cfg.budget, cfg.g_convention):
        console.print(line, highlight=False, soft_wrap=True)
    return EXIT_OK


def cmd_catalog() -> int:
    for subject in catalog.catalog_entries():
        console.print(f"[info]{escape(subject.name)}[/info]  {escape(subject.description)}")
    console.print("[info]Ukn[/info]  any uniform matroid U(k,n) with k <= n <= 6")
    console.print("[info]LOOPSk[/info]  k loops")
    return EXIT_OK


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    verbose = getattr(args, "verbose", False)
    _setup_logging(verbose)
    if verbose:
        console.print("[info]Verbose mode enabled.[/info]")
    if getattr(args, "debug", False):
        console.print("[info]Debug mode enabled (rich traceback handler active).[/info]")
    else:
        install_rich_traceback(show_locals=False, suppress=[])

    try:  # Main command execution block
        if args.command == "catalog":
            code = cmd_catalog()
        else:
            cfg = _run_config(args)
            if args.command == "poly":
                code = cmd_poly(cfg, args.which)
            elif args.command == "verify":
                code = cmd_verify(cfg)
            else:
                code = cmd_demo(cfg, args.which, args.q or DEMO_DEFAULT_Q[args.which])

    except QMatroidError as e:
        _report_error(args, e)
        sys.exit(e.exit_code)
    except Exception as e:
        _report_error(args, e)
        sys.exit(EXIT_UNEXPECTED)

    sys.exit(code)


def _report_error(args: argparse.Namespace, error: Exception) -> None:
    if getattr(args, "debug", False):
        console.print("[error]An error occurred:[/error]")
        console.print_exception(show_locals=True)
    else:
        console.print(f"[error]Error:[/error] {escape(str(error))}")
        console.print("Run with --debug for more details.")


if __name__ == "__main__":
    main()
