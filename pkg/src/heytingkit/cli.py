"""Command-line interface for heytingkit."""

import argparse
import sys
from typing import List, Optional

from . import commands, config
from .calculus import Calculus
from .commands.base import EXIT_BUDGET, EXIT_FINDING, EXIT_INPUT
from .errors import BudgetExceeded, HeytingError, InputError, log_error
from .logging_config import enable_debug, get_logger
from .variety import SearchBounds

logger = get_logger(__name__)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Write the report as JSON")
    common.add_argument(
        "-q", "--quiet", action="store_true", help="Suppress the banner and progress bars"
    )
    common.add_argument(
        "--debug", action="store_true", default=argparse.SUPPRESS, help="Enable debug logging"
    )
    return common


def _search_options() -> argparse.ArgumentParser:
    search = argparse.ArgumentParser(add_help=False)
    search.add_argument(
        "--vars", type=int, default=config.SEARCH_MAX_VARS, help="Variables in searched terms"
    )
    search.add_argument(
        "--depth", type=int, default=config.SEARCH_MAX_DEPTH, help="Maximal term depth"
    )
    search.add_argument(
        "--limit",
        type=int,
        default=config.SEARCH_TERM_LIMIT,
        help="Maximal number of term classes explored",
    )
    search.add_argument(
        "--seed", type=int, default=config.DEFAULT_SEED, help="Seed for sampled checks"
    )
    return search


def create_parser() -> argparse.ArgumentParser:
    """Create argument parser."""
    parser = argparse.ArgumentParser(
        prog="heytingkit", description="Finite Heyting algebras, enrichments and tilde logics"
    )
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")
    common, search = _common_options(), _search_options()
    algebra_help = "Algebra file, or fixture:<kind> such as fixture:chain3"

    subparsers = parser.add_subparsers(dest="command", help="Command to execute")

    # Spectrum
    filters_parser = subparsers.add_parser(
        "prime-filters", parents=[common], help="List prime filters and special filters"
    )
    filters_parser.add_argument("algebra", help=algebra_help)

    # Stone embedding and delta
    delta_parser = subparsers.add_parser(
        "delta", parents=[common], help="Show h, delta h and delta[A_X]"
    )
    delta_parser.add_argument("algebra", help=algebra_help)
    delta_parser.add_argument(
        "--elements", nargs="+", metavar="LABEL", help="Elements of X (default: all)"
    )

    # Enrichment
    enrich_parser = subparsers.add_parser(
        "enrich", parents=[common], help="Show enrichments and tilde tables"
    )
    enrich_parser.add_argument("algebra", help=algebra_help)
    enrich_parser.add_argument(
        "--tau", nargs="+", metavar="LABEL", help="Elements whose tilde table is shown"
    )

    # Invariant suite
    verify_parser = subparsers.add_parser(
        "verify", parents=[common, search], help="Run the invariant suite"
    )
    verify_parser.add_argument("algebra", help=algebra_help)

    # Varieties
    compare_parser = subparsers.add_parser(
        "compare-varieties",
        parents=[common, search],
        help="Search for an identity separating two algebras",
    )
    compare_parser.add_argument("first", help=algebra_help)
    compare_parser.add_argument("second", help=algebra_help)
    compare_parser.add_argument(
        "--exact", action="store_true", help="Decide variety membership exactly"
    )

    # Derivations
    check_parser = subparsers.add_parser(
        "check", parents=[common], help="Check a derivation file"
    )
    check_parser.add_argument("derivation", help="Derivation file")
    check_parser.add_argument(
        "--calculus",
        choices=[c.value for c in Calculus],
        default=Calculus.KM_TAU.value,
        help="Calculus to check in",
    )
    check_parser.add_argument(
        "--premise", action="append", metavar="FORMULA", help="Premise (repeatable)"
    )

    purify_parser = subparsers.add_parser(
        "purify", parents=[common], help="Purify a KM_tau derivation into Int_tau"
    )
    purify_parser.add_argument("derivation", help="Derivation file")
    purify_parser.add_argument("--out", help="Output derivation file (default: stdout)")
    purify_parser.add_argument(
        "--premise", action="append", metavar="FORMULA", help="Premise (repeatable)"
    )

    return parser


def build_command(args: argparse.Namespace) -> commands.HeytingCommand:
    """Create the command object for parsed arguments."""
    options = {"json_output": args.json, "quiet": args.quiet}
    if args.command == "prime-filters":
        return commands.PrimeFiltersCommand(args.algebra, **options)
    if args.command == "delta":
        return commands.DeltaCommand(args.algebra, elements=args.elements, **options)
    if args.command == "enrich":
        return commands.EnrichCommand(args.algebra, tau=args.tau, **options)
    if args.command == "verify":
        bounds = SearchBounds(max_vars=args.vars, max_depth=args.depth, term_limit=args.limit)
        return commands.VerifyCommand(args.algebra, bounds, args.seed, **options)
    if args.command == "compare-varieties":
        return commands.CompareVarietiesCommand(
            args.first,
            args.second,
            max_vars=args.vars,
            max_depth=args.depth,
            limit=args.limit,
            exact=args.exact,
            seed=args.seed,
            **options,
        )
    if args.command == "check":
        return commands.CheckCommand(
            args.derivation, calculus=args.calculus, premises=args.premise, **options
        )
    if args.command == "purify":
        return commands.PurifyCommand(
            args.derivation, out=args.out, premises=args.premise, **options
        )
    raise InputError(f"unknown command {args.command!r}")


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point.

    Returns:
        int: Exit code
    """
    parser = create_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(args=argv if argv else ["--help"])
    except SystemExit as e:
        return EXIT_INPUT if e.code == 2 else e.code

    if args.debug:
        enable_debug()

    if not args.command:
        parser.print_help()
        return EXIT_INPUT

    try:
        command = build_command(args)
        return command.run()
    except BudgetExceeded as e:
        log_error(e, "Budget exceeded")
        return EXIT_BUDGET
    except (InputError, OSError) as e:
        log_error(e, "Invalid input")
        return EXIT_INPUT
    except HeytingError as e:
        log_error(e, "Command failed")
        return EXIT_FINDING


if __name__ == "__main__":
    sys.exit(main())
