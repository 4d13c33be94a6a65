import argparse
import json
import logging
import pathlib
import sys
import time
import typing

from logging_bullet_train import set_logger
from rich.console import Console
from rich.table import Table

from chromapoly.closed_forms import chrom_complete, chrom_interlocking
from chromapoly.closed_forms.formulas import interlocking_formula
from chromapoly.config import Settings
from chromapoly.datasets import (
    dataset,
    list_datasets,
    parse_edge_list,
    serialize_edge_list,
)
from chromapoly.engine import (
    BranchHeuristic,
    ChromaticEngine,
    ChromaticResult,
    EngineStrategy,
)
from chromapoly.exceptions import ChromapolyError, EdgeListParseError
from chromapoly.graph.families import interlocking
from chromapoly.graph.structure import connected_components
from chromapoly.logger_name import LOGGER_NAME
from chromapoly.version import VERSION
from chromapoly.types.dataset import ExpectedMetadata
from chromapoly.types.document import (
    ClaimCheck,
    ClaimOutcome,
    ClaimVerdict,
    CoefficientMismatch,
    GraphMetadata,
    OutputDocument,
    ReferenceComparison,
    Timing,
    TraceSummary,
)
from chromapoly.types.graph import Graph
from chromapoly.types.polynomial import Polynomial
from chromapoly.types.report import CheckName, CheckStatus, VerificationReport
from chromapoly.verifier import naive_chromatic, verify_structure
from chromapoly.verifier.faults import FAULTS, inject_fault

logger = logging.getLogger(__name__)

EXIT_OK: typing.Final[int] = 0
EXIT_VERIFICATION_FAILED: typing.Final[int] = 1


class _Input(typing.NamedTuple):
    name: typing.Text | None
    graph: Graph
    expected: ExpectedMetadata | None


def _load_input(args: argparse.Namespace) -> _Input:
    if args.dataset is not None:
        ds = dataset(args.dataset)
        return _Input(ds.name, ds.graph, ds.expected)
    if args.input is None:
        raise EdgeListParseError(0, "give an .edges file or --dataset NAME")
    path = pathlib.Path(args.input)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise EdgeListParseError(0, f"cannot read {path}: {e.strerror}") from e
    return _Input(path.stem, parse_edge_list(text), None)


def _engine(args: argparse.Namespace, settings: Settings) -> ChromaticEngine:
    return ChromaticEngine.from_settings(
        settings,
        strategy=getattr(args, "strategy", None),
        branch_heuristic=getattr(args, "heuristic", None),
        node_budget=getattr(args, "budget", None),
        time_budget=getattr(args, "time_budget", None),
        trace_enabled=bool(getattr(args, "trace", False)),
        threads=args.threads,
    )


def _compare_reference(
    p: Polynomial, expected: ExpectedMetadata
) -> ReferenceComparison | None:
    if expected.coefficients is None:
        return None
    printed = Polynomial.from_descending(expected.coefficients)
    top = max(p.degree, printed.degree)
    mismatches = [
        CoefficientMismatch(
            power=power,
            expected=str(printed.coefficient(power)),
            actual=str(p.coefficient(power)),
        )
        for power in range(top, -1, -1)
        if printed.coefficient(power) != p.coefficient(power)
    ]
    for m in mismatches:
        logger.warning(
            f"Coefficient of t^{m.power} is {m.actual}, printed {m.expected}"
        )
    claim_points = sorted({c.t for c in expected.claims})
    return ReferenceComparison(
        coefficients_match=not mismatches,
        mismatches=mismatches,
        printed_evaluations={str(t): str(printed.eval(t)) for t in claim_points},
    )


def _claims(
    p: Polynomial, expected: ExpectedMetadata
) -> typing.Tuple[typing.List[ClaimCheck], typing.List[ClaimVerdict]]:
    checks = [
        ClaimCheck(
            t=c.t, value=c.value, source=c.source, matches=p.eval(c.t) == int(c.value)
        )
        for c in expected.claims
    ]
    verdicts: typing.List[ClaimVerdict] = []
    for t in sorted({c.t for c in expected.claims}):
        computed = p.eval(t)
        matched = [c for c in checks if c.t == t and c.matches]
        if matched:
            verdict = ClaimVerdict(
                t=t,
                computed=str(computed),
                outcome=ClaimOutcome.MATCHES_CLAIM,
                matched_source=matched[0].source,
            )
        elif (
            expected.coefficients is not None
            and Polynomial.from_descending(expected.coefficients).eval(t) == computed
        ):
            verdict = ClaimVerdict(
                t=t,
                computed=str(computed),
                outcome=ClaimOutcome.MATCHES_PRINTED_COEFFICIENTS,
            )
        else:
            verdict = ClaimVerdict(
                t=t, computed=str(computed), outcome=ClaimOutcome.UNEXPLAINED
            )
        verdicts.append(verdict)
    return checks, verdicts


def build_document(
    source: _Input,
    result: ChromaticResult,
    *,
    strategy: typing.Text,
    evaluations: typing.Sequence[int] = (),
    report: VerificationReport | None = None,
    include_trace: bool = False,
    seconds: float = 0.0,
) -> OutputDocument:
    p = result.polynomial
    g = source.graph
    trace = None
    if include_trace:
        stats = result.stats
        trace = TraceSummary(
            counts=stats.per_kind(),
            nodes=stats.nodes,
            memo_hits=stats.memo_hits,
            memo_misses=stats.memo_misses,
            max_depth=stats.max_depth,
        )

    claims: typing.List[ClaimCheck] = []
    verdicts: typing.List[ClaimVerdict] = []
    reference = None
    if source.expected is not None:
        claims, verdicts = _claims(p, source.expected)
        reference = _compare_reference(p, source.expected)

    return OutputDocument(
        graph=GraphMetadata(
            name=source.name,
            vertices=g.n,
            edges=g.number_of_edges,
            components=len(connected_components(g)),
        ),
        strategy=strategy,
        polynomial=p.to_descending(),
        text=p.to_text(),
        evaluations={str(t): str(p.eval(t)) for t in evaluations},
        report=report,
        trace=trace,
        paper_claims=claims,
        claim_verdicts=verdicts,
        reference=reference,
        timing=Timing(seconds=seconds),
    )


# Rendering
def _render_report(console: Console, report: VerificationReport) -> None:
    table = Table(title="Structural checks")
    table.add_column("check")
    table.add_column("status")
    table.add_column("expected")
    table.add_column("actual")
    table.add_column("description")
    styles = {
        CheckStatus.PASS: "green",
        CheckStatus.FAIL: "bold red",
        CheckStatus.NOT_APPLICABLE: "dim",
    }
    for c in report.checks:
        table.add_row(
            c.name.value,
            f"[{styles[c.status]}]{c.status.value}[/]",
            c.expected or "",
            c.actual or "",
            c.description,
        )
    console.print(table)
    console.print(
        f"{report.vertices} vertices, {report.edges} edges, "
        + f"{report.components} component(s)",
        highlight=False,
    )


def _render_document(console: Console, doc: OutputDocument) -> None:
    console.print(doc.text, highlight=False, soft_wrap=True)
    for t, value in doc.evaluations.items():
        console.print(f"{t}: {value}", highlight=False)
    if doc.report is not None:
        _render_report(console, doc.report)
    if doc.trace is not None:
        parts = ", ".join(f"{k}={v}" for k, v in doc.trace.counts.items())
        console.print(f"trace: {parts}", highlight=False)
    for claim in doc.paper_claims:
        flag = "match" if claim.matches else "mismatch"
        console.print(
            f"claim t={claim.t}: {claim.value} ({claim.source}): {flag}",
            highlight=False,
        )
    for verdict in doc.claim_verdicts:
        console.print(
            f"t={verdict.t}: computed {verdict.computed}, {verdict.outcome.value}",
            highlight=False,
        )
    if doc.reference is not None:
        if doc.reference.coefficients_match:
            console.print("printed coefficients: match", highlight=False)
        else:
            console.print(
                f"printed coefficients: {len(doc.reference.mismatches)} mismatch(es)",
                highlight=False,
            )


def _emit(console: Console, args: argparse.Namespace, doc: OutputDocument) -> None:
    if args.format == "json":
        print(doc.model_dump_json(indent=2))
    else:
        _render_document(console, doc)


# Commands
def cmd_poly(args: argparse.Namespace, settings: Settings, console: Console) -> int:
    source = _load_input(args)
    engine = _engine(args, settings)
    started = time.monotonic()
    result = engine.chromatic(source.graph)
    doc = build_document(
        source,
        result,
        strategy=engine.config.strategy.value,
        evaluations=args.eval or (),
        include_trace=args.trace,
        seconds=time.monotonic() - started,
    )
    _emit(console, args, doc)
    return EXIT_OK


def cmd_count(args: argparse.Namespace, settings: Settings, console: Console) -> int:
    if args.k < 0:
        raise EdgeListParseError(0, "-k must be non-negative")
    source = _load_input(args)
    result = _engine(args, settings).chromatic(source.graph)
    count = result.polynomial.eval(args.k)
    if args.format == "json":
        print(json.dumps({"t": args.k, "count": str(count)}))
    else:
        console.print(str(count), highlight=False)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, settings: Settings, console: Console) -> int:
    source = _load_input(args)
    engine = _engine(args, settings)
    started = time.monotonic()
    result = engine.chromatic(source.graph)
    p = result.polynomial
    if args.inject_fault is not None:
        components = len(connected_components(source.graph))
        p = inject_fault(p, CheckName(args.inject_fault), components)
        logger.warning(f"Injected fault '{args.inject_fault}': checking {p}")
        result = result._replace(polynomial=p)
    report = verify_structure(source.graph, p)
    doc = build_document(
        source,
        result,
        strategy=engine.config.strategy.value,
        report=report,
        seconds=time.monotonic() - started,
    )
    if args.format == "json":
        print(doc.model_dump_json(indent=2))
    else:
        _render_report(console, report)
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED


def cmd_datasets(
    args: argparse.Namespace, settings: Settings, console: Console
) -> int:
    rows = []
    for definition in list_datasets():
        g = dataset(definition.name).graph
        rows.append(
            {
                "name": definition.name,
                "vertices": g.n,
                "edges": g.number_of_edges,
                "description": definition.description,
            }
        )
    if args.format == "json":
        print(json.dumps(rows, indent=2))
        return EXIT_OK
    columns = ("name", "vertices", "edges", "description")
    table = Table(title="Embedded datasets")
    for column in columns:
        table.add_column(column)
    for row in rows:
        table.add_row(*(str(row[c]) for c in columns))
    console.print(table)
    return EXIT_OK


def cmd_export(args: argparse.Namespace, settings: Settings, console: Console) -> int:
    ds = dataset(args.dataset)
    text = serialize_edge_list(ds.graph, header=[ds.description])
    if args.output is None:
        sys.stdout.write(text)
    else:
        pathlib.Path(args.output).write_text(text, encoding="utf-8")
        logger.info(f"Wrote {ds.name} to {args.output}")
    return EXIT_OK


def cmd_theorem(args: argparse.Namespace, settings: Settings, console: Console) -> int:
    rows: typing.List[typing.Dict[typing.Text, typing.Any]] = []
    for m in range(4, args.max + 1):
        for n in range(m, args.max + 1):
            if m + n < 9:
                continue
            formula = chrom_interlocking(m, n)
            oracle = naive_chromatic(interlocking(m, n))
            rows.append(
                {
                    "m": m,
                    "n": n,
                    "formula": formula.to_text(),
                    "match": formula == oracle,
                }
            )
    # W_4 and W_4 cannot interlock; the formula is still checked against K_4.
    rows.append(
        {
            "m": 4,
            "n": 4,
            "formula": interlocking_formula(4, 4).to_text(),
            "match": interlocking_formula(4, 4) == chrom_complete(4),
        }
    )
    ok = all(row["match"] for row in rows)

    if args.format == "json":
        print(json.dumps({"rows": rows, "all_match": ok}, indent=2))
    else:
        table = Table(title="Interlocking wheels: formula against deletion-contraction")
        for column in ("m", "n", "match", "formula"):
            table.add_column(column)
        for row in rows:
            table.add_row(
                str(row["m"]),
                str(row["n"]),
                "[green]yes[/]" if row["match"] else "[bold red]no[/]",
                row["formula"],
            )
        console.print(table)
    return EXIT_OK if ok else EXIT_VERIFICATION_FAILED


# Parser
def _positive_int(text: typing.Text) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _positive_float(text: typing.Text) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def _add_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("input", nargs="?", help="Path to an .edges file")
    parser.add_argument("--dataset", help="Name of an embedded dataset")
    parser.add_argument("--format", choices=("text", "json"), default="text")


def _add_engine(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--strategy", choices=[s.value for s in EngineStrategy], default=None
    )
    parser.add_argument(
        "--heuristic", choices=[h.value for h in BranchHeuristic], default=None
    )
    parser.add_argument(
        "--budget", type=_positive_int, default=None, help="Node limit"
    )
    parser.add_argument(
        "--time-budget",
        type=_positive_float,
        default=None,
        help="Time limit in seconds",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromapoly",
        description="Exact chromatic polynomials by reduction",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    parser.add_argument("--verbose", action="store_true", help="Debug logging")
    parser.add_argument(
        "--threads",
        type=int,
        default=None,
        help="Workers for independent sub-problems (overrides CHROMAPOLY_THREADS)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    poly = commands.add_parser("poly", help="Print the chromatic polynomial")
    _add_input(poly)
    _add_engine(poly)
    poly.add_argument("--eval", type=int, action="append", metavar="T")
    poly.add_argument("--trace", action="store_true", help="Include a trace summary")
    poly.set_defaults(handler=cmd_poly)

    count = commands.add_parser("count", help="Number of proper t-colourings")
    _add_input(count)
    _add_engine(count)
    count.add_argument("-k", type=int, required=True, metavar="T")
    count.set_defaults(handler=cmd_count)

    verify = commands.add_parser("verify", help="Check structural properties")
    _add_input(verify)
    _add_engine(verify)
    verify.add_argument("--inject-fault", choices=FAULTS, default=None)
    verify.set_defaults(handler=cmd_verify)

    datasets = commands.add_parser("datasets", help="List embedded datasets")
    datasets.add_argument("--format", choices=("text", "json"), default="text")
    datasets.set_defaults(handler=cmd_datasets)

    export = commands.add_parser("export", help="Write a dataset as .edges")
    export.add_argument("--dataset", required=True)
    export.add_argument("-o", "--output", default=None)
    export.set_defaults(handler=cmd_export)

    theorem = commands.add_parser(
        "theorem", help="Check the interlocking-wheels formula"
    )
    theorem.add_argument("--max", type=_positive_int, default=8)
    theorem.add_argument("--format", choices=("text", "json"), default="text")
    theorem.set_defaults(handler=cmd_theorem)

    return parser


def main(argv: typing.Sequence[typing.Text] | None = None) -> int:
    args = build_parser().parse_args(argv)
    settings = Settings()  # type: ignore
    if args.threads is not None and args.threads < 0:
        args.threads = None
    if args.threads == 0:
        args.threads = settings.worker_count

    set_logger(
        LOGGER_NAME, level=logging.DEBUG if args.verbose else settings.log_level
    )
    console = Console()

    try:
        return args.handler(args, settings, console)
    except ChromapolyError as e:
        logger.error(f"{type(e).__name__}: {e.detail}")
        Console(stderr=True).print(f"error: {e.detail}", highlight=False)
        return e.exit_code


def main_entry() -> None:
    sys.exit(main())
