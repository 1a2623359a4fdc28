# /src/main.py

"""Command-line front end: one JSON report per invocation on standard output."""

import argparse
import json
import logging
import sys
from typing import List, Optional

import yaml
from pydantic import BaseModel, ValidationError

from core.errors import CapExceededError, MudefError
from schemas.common import AutarkyMode, ReductionStrategy
from schemas.config import load_settings
from schemas.report import ErrorDocument, ErrorReport, Report
from workflows import ReportWorkflow, ReportWorkflowInput

logger = logging.getLogger("mudef")

EXIT_INPUT_ERROR = 2
EXIT_CAP_REFUSED = 3


def _order(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated variables, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="YAML settings file (default: $MUDEF_CONFIG)")
    common.add_argument(
        "-v", "--verbose", action="count", default=0,
        help="Log to stderr: -v info, -vv debug",
    )
    common.add_argument(
        "--pretty", action="store_true", help="Render the report as YAML for humans"
    )

    dimacs = argparse.ArgumentParser(add_help=False)
    dimacs.add_argument("path", help="DIMACS CNF file")
    dimacs.add_argument(
        "--strip-tautologies", action="store_true",
        help="Drop tautological clauses instead of rejecting the input",
    )

    parser = argparse.ArgumentParser(
        prog="mudef",
        description="Minimal unsatisfiability and deficiency toolkit",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Example:
 python src/main.py analyze formula.cnf --vmu --lean
 python src/main.py enumerate --deficiency 2 --n-max 3 --out d2.jsonl
 python src/main.py conjectures --n-max-uhit 4 --k 2
    """,
    )
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser(
        "analyze", parents=[common, dimacs], help="Metrics and class membership"
    )
    for flag, text in (
        ("--mu", "minimal unsatisfiability and its level"),
        ("--hitting", "hitting and unsatisfiable hitting"),
        ("--vmu", "variable-minimal unsatisfiability"),
        ("--lean", "leanness (no non-trivial autarky)"),
        ("--irreducible", "clause-irreducibility"),
    ):
        analyze.add_argument(flag, action="store_true", help=f"Decide {text}")

    reduce = commands.add_parser(
        "reduce", parents=[common, dimacs], help="Singular DP-reduction normal forms"
    )
    reduce.add_argument(
        "--strategy",
        choices=[s.value for s in ReductionStrategy],
        default=ReductionStrategy.FIRST_ID.value,
        help="Singular variable choice rule",
    )
    reduce.add_argument(
        "--order", type=_order, help="Variable order, e.g. 3,1,2 (implies given-order)"
    )
    reduce.add_argument(
        "--all", action="store_true", dest="all_forms",
        help="All normal forms grouped up to isomorphism",
    )

    autarky = commands.add_parser(
        "autarky", parents=[common, dimacs], help="Autarkies, lean kernel, surplus"
    )
    autarky.add_argument("mode", choices=[m.value for m in AutarkyMode])
    autarky.add_argument("--order", type=_order, help="Variable order for the search")

    enumerate_ = commands.add_parser(
        "enumerate", parents=[common], help="Catalog of MU(δ=k) or UHit(δ=k)"
    )
    enumerate_.add_argument("--n-max", type=int, required=True, help="Largest n")
    enumerate_.add_argument("--deficiency", type=int, required=True, help="Target δ")
    enumerate_.add_argument("--hitting", action="store_true", help="Hitting only")
    enumerate_.add_argument("--nonsingular", action="store_true", help="Nonsingular only")
    enumerate_.add_argument("--out", help="Write the JSON-lines catalog here")

    conjectures = commands.add_parser(
        "conjectures", parents=[common], help="Check the published deficiency constants"
    )
    conjectures.add_argument("--n-max-d1", type=int, default=4)
    conjectures.add_argument("--n-max-d2", type=int, default=3)
    conjectures.add_argument("--n-max-d3", type=int, default=3)
    conjectures.add_argument("--n-max-uhit", type=int, default=4)
    conjectures.add_argument("--k", type=int, default=2)
    conjectures.add_argument(
        "--catalog", action="append", default=[], dest="catalogs",
        help="Catalog replacing the enumerated one of its class (repeatable)",
    )

    commands.add_parser("schema", parents=[common], help="Print the report JSON schema")
    return parser


def workflow_input(args: argparse.Namespace, argv: List[str]) -> ReportWorkflowInput:
    options = {}
    path = None
    strip = False
    if args.command in ("analyze", "reduce", "autarky"):
        path = args.path
        strip = args.strip_tautologies

    if args.command == "analyze":
        names = ("mu", "hitting", "vmu", "lean", "irreducible")
        flags = {name: getattr(args, name) for name in names}
        if not any(flags.values()):
            flags["mu"] = flags["hitting"] = True
        options = flags
    elif args.command == "reduce":
        options = {"strategy": args.strategy, "all_forms": args.all_forms}
        if args.order:
            options["strategy"] = ReductionStrategy.GIVEN_ORDER.value
            options["order"] = args.order
    elif args.command == "autarky":
        options = {"mode": args.mode, "order": args.order}
    elif args.command == "enumerate":
        options = {
            "spec": {
                "n_max": args.n_max,
                "deficiency": args.deficiency,
                "require_hitting": args.hitting,
                "require_nonsingular": args.nonsingular,
            },
            "out": args.out,
        }
    elif args.command == "conjectures":
        options = {
            "n_max_d1": args.n_max_d1,
            "n_max_d2": args.n_max_d2,
            "n_max_d3": args.n_max_d3,
            "n_max_uhit": args.n_max_uhit,
            "k": args.k,
            "catalog_paths": args.catalogs,
        }
    return ReportWorkflowInput(
        command=argv, tool=args.command, path=path, strip_tautologies=strip, options=options
    )


def emit(document: BaseModel, pretty: bool, stream=None) -> None:
    stream = stream or sys.stdout
    if pretty:
        data = json.loads(document.model_dump_json())
        stream.write(yaml.safe_dump(data, sort_keys=False, allow_unicode=True))
    else:
        stream.write(document.model_dump_json() + "\n")


def _error_exit(error: Exception, exit_code: int, pretty: bool) -> int:
    logger.error("%s", error)
    report = ErrorReport(
        kind=type(error).__name__,
        message=str(error),
        exit_code=exit_code,
        cap_name=getattr(error, "cap_name", None),
    )
    emit(ErrorDocument(error=report), pretty)
    return exit_code


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )
    logging.getLogger().setLevel(level)


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)

    if args.command == "schema":
        sys.stdout.write(json.dumps(Report.model_json_schema(), indent=2) + "\n")
        return 0

    try:
        settings = load_settings(args.config)
        workflow = ReportWorkflow(settings)
        result = workflow(workflow_input(args, argv))
    except CapExceededError as e:
        return _error_exit(e, EXIT_CAP_REFUSED, args.pretty)
    except (MudefError, ValidationError, ValueError, OSError) as e:
        return _error_exit(e, EXIT_INPUT_ERROR, args.pretty)

    emit(result.report, args.pretty)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
