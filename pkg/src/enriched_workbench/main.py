"""main.py
Command-line front end: read category descriptions, run the verifiers and
constructions, and emit machine-readable reports.

Exit codes: 0 when every check passes, 1 on a law failure, an undetermined
check or a coverage gap, 2 when the input cannot be read or has the wrong
shape.
"""

# Get packages.
import argparse
import logging
import sys
import time
from pathlib import Path
from typing import List, Optional, Tuple

# User defined modules.
from enriched_workbench.base_category import BaseCategory, verify_base_laws
from enriched_workbench.center import (
    classify_center, monoidal_equivalence_conditions,
    tensored_iff_strong_check)
from enriched_workbench.closed import (
    ClosedStructure, frobenius_closed_structure, trivial_closed_structure)
from enriched_workbench.completion import (
    complete, completion_report, equivalence_conditions)
from enriched_workbench.config import get_config
from enriched_workbench.enriched_core import verify_vcategory
from enriched_workbench.errors import (
    ClosednessDataMissing, CoverageGap, WorkbenchError)
from enriched_workbench.module_correspondence import search_tensoring
from enriched_workbench.reports import (
    FAIL, PASS, CheckResult, Report, RunReport)
from enriched_workbench.serialization import (
    dumps, duals_from_json, load_json, tensoring_from_json, tensoring_to_json,
    vcat_from_json, vcat_to_json, vmonoidal_from_json, vmonoidal_to_json,
    weights_from_json, window_from_json, write_atomic)
from enriched_workbench.vmonoidal import (
    VMonoidalCategory, monoidal_complete, monoidal_report)

# Get the logger instance.
logger = logging.getLogger(__name__)

# Constants.
EXIT_INPUT = 2
SEARCH_CAVEAT = ("A pair reported as not found is not a proof that the "
                 "category is not tensored there.")

Outcome = Tuple[List[Report], Optional[object], List[str]]


def _is_monoidal(data) -> bool:
    return isinstance(data, dict) and "unit" in data


def load_closed(M: VMonoidalCategory, data) -> ClosedStructure:
    """
    Internal homs for a monoidal document: from its "duals" section, or
    [*, *] = * when the only endomorphism object is 1_V.

    Raises:
        ClosednessDataMissing: If neither applies.
    """
    if "duals" in data:
        return frobenius_closed_structure(duals_from_json(M, data["duals"]))
    star = M.unit
    if len(M.objects) == 1 and M.vcat.hom(star, star) == M.base.unit:
        return trivial_closed_structure(M)
    raise ClosednessDataMissing(
        "The monoidal document has no 'duals' section.")


# Commands --------------------------------------------------------------------
def cmd_validate(args) -> Outcome:
    """Dispatch a document to its verifier."""
    data = load_json(args.file)
    if args.kind == "base":
        base = BaseCategory.from_json(data)
        return [verify_base_laws(base, seed=args.seed)], None, []
    if args.kind == "vcat":
        return [verify_vcategory(vcat_from_json(data))], None, []
    if args.kind == "vmonoidal":
        M = vmonoidal_from_json(data)
        reports = [monoidal_report(M, args.sample, args.seed)]
        if "duals" in data:
            reports.append(duals_from_json(M, data["duals"]).verify())
        return reports, None, []
    # Tensoring witnesses need their category.
    if args.category is None:
        raise WorkbenchError("validate tensoring needs --category FILE.")
    C = vcat_from_json(load_json(args.category))
    T = tensoring_from_json(C, data)
    return [T.validate()], None, []


def cmd_complete(args) -> Outcome:
    """Materialise the (monoidal) completion on a window."""
    data = load_json(args.category)
    M = vmonoidal_from_json(data) if args.monoidal else None
    C = M.vcat if M is not None else vcat_from_json(data)
    window = window_from_json(C, load_json(args.window))
    weights = weights_from_json(C.base, load_json(args.weights)) \
        if args.weights else []
    cap = args.dim_cap if args.dim_cap is not None else get_config().dim_cap
    if M is not None:
        Mbar = monoidal_complete(M, window, weights, cap)
        Cbar = Mbar.vcat
        reports = [completion_report(C, Cbar, weights),
                   monoidal_report(Mbar, args.sample, args.seed)]
        return reports, vmonoidal_to_json(Mbar), []
    Cbar = complete(C, window, weights, cap)
    return [completion_report(C, Cbar, weights)], vcat_to_json(Cbar), []


def cmd_check_tensored(args) -> Outcome:
    """The four completeness conditions and their agreement."""
    data = load_json(args.category)
    M = vmonoidal_from_json(data) if _is_monoidal(data) else None
    C = M.vcat if M is not None else vcat_from_json(data)
    T = tensoring_from_json(C, load_json(args.tensoring))
    window = window_from_json(C, load_json(args.window)) \
        if args.window else []
    if M is not None:
        report = monoidal_equivalence_conditions(
            M, T, load_closed(M, data), window)
    else:
        report = equivalence_conditions(C, T, window)
    conditions = report.data.get("conditions", {})
    notes = [f"{key}: {value}" for key, value in conditions.items()]
    return [report], None, notes


def cmd_classify(args) -> Outcome:
    """The center functor (F, ν, e) with the tensored cross-check."""
    data = load_json(args.category)
    M = vmonoidal_from_json(data)
    closed = load_closed(M, data)
    T = tensoring_from_json(M.vcat, load_json(args.tensoring))
    weights = weights_from_json(M.base, load_json(args.weights)) \
        if args.weights else None
    cls = classify_center(M, T, closed, weights, args.dim_cap)
    cross = tensored_iff_strong_check(M, T, closed, classification=cls)
    notes = [f"F is {'strong' if cls.strong else 'oplax'} monoidal",
             f"tensored: {cross.data['tensored']}"]
    return [cls.report, cross], cls.to_json(), notes


def cmd_search_tensoring(args) -> Outcome:
    """Look for tensoring witnesses among the existing objects."""
    C = vcat_from_json(load_json(args.category))
    weights = weights_from_json(C.base, load_json(args.weights)) \
        if args.weights else C.base.simples()
    T, report = search_tensoring(C, weights, args.max_candidates, args.seed)
    notes = [f"found {report.data['found']} of "
             f"{len(C.objects) * len(weights)} pairs"]
    if report.verdict != PASS:
        notes.append(SEARCH_CAVEAT)
    return [report], tensoring_to_json(T), notes


COMMANDS = {
    "validate": cmd_validate,
    "complete": cmd_complete,
    "check-tensored": cmd_check_tensored,
    "classify": cmd_classify,
    "search-tensoring": cmd_search_tensoring,
}


# Parser ----------------------------------------------------------------------
def _common(parser: argparse.ArgumentParser):
    parser.add_argument("--verbose", action="store_true",
                        help="Log at DEBUG level on stderr.")
    parser.add_argument("--report", choices=("json", "text"), default="json",
                        help="Format of the run report on stdout.")
    parser.add_argument("--output", type=Path, default=None,
                        help="Write the produced document here (the run "
                             "report for commands that produce none).")
    parser.add_argument("--seed", type=int, default=0,
                        help="Seed for randomised checks.")


def build_parser() -> argparse.ArgumentParser:
    """The vcwb argument parser."""
    parser = argparse.ArgumentParser(
        prog="vcwb", description="Exact workbench for enriched categories.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="Verify a document.")
    p.add_argument("kind", choices=("base", "vcat", "vmonoidal", "tensoring"))
    p.add_argument("file", type=Path)
    p.add_argument("--category", type=Path, default=None,
                   help="The category of a tensoring document.")
    p.add_argument("--sample", type=int, default=None,
                   help="Check this many random tuples of each monoidal law.")
    _common(p)

    p = sub.add_parser("complete", help="Materialise a completion.")
    p.add_argument("category", type=Path)
    p.add_argument("window", type=Path)
    p.add_argument("--monoidal", action="store_true")
    p.add_argument("--dim-cap", type=int, default=None)
    p.add_argument("--weights", type=Path, default=None)
    p.add_argument("--sample", type=int, default=None)
    p.add_argument("--bless", type=Path, default=None,
                   help="Rewrite this golden file with the output.")
    _common(p)

    p = sub.add_parser("check-tensored",
                       help="Evaluate the completeness conditions.")
    p.add_argument("category", type=Path)
    p.add_argument("tensoring", type=Path)
    p.add_argument("--window", type=Path, default=None)
    _common(p)

    p = sub.add_parser("classify", help="Compute the center functor.")
    p.add_argument("category", type=Path)
    p.add_argument("tensoring", type=Path)
    p.add_argument("--weights", type=Path, default=None)
    p.add_argument("--dim-cap", type=int, default=None)
    p.add_argument("--bless", type=Path, default=None,
                   help="Rewrite this golden file with the output.")
    _common(p)

    p = sub.add_parser("search-tensoring",
                       help="Search for tensoring witnesses.")
    p.add_argument("category", type=Path)
    p.add_argument("--max-candidates", type=int, default=32)
    p.add_argument("--weights", type=Path, default=None)
    _common(p)
    return parser


def _coverage_report(error: CoverageGap) -> Report:
    report = Report("coverage")
    report.checks.append(CheckResult(
        "coverage", "data needed outside the declared scope", FAIL,
        {"missing": [str(item) for item in error.missing],
         "message": str(error)}))
    return report


def _emit(args, run: RunReport, document) -> None:
    """Write the document (or the report) and print the report."""
    text = run.to_json() if args.report == "json" else run.to_text()
    if document is not None:
        if args.output is not None:
            write_atomic(args.output, dumps(document))
        bless = getattr(args, "bless", None)
        if bless is not None:
            write_atomic(bless, dumps(document))
            logger.info("Blessed %s.", bless)
    elif args.output is not None:
        write_atomic(args.output, text)
    print(text)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Entry point of vcwb.

    Args:
        argv (list): Arguments (sys.argv[1:] by default).

    Returns:
        int: The exit code.
    """
    args = build_parser().parse_args(argv)

    # Load config.
    config = get_config()
    config.validate()
    config.apply_logging()
    if args.verbose:
        logging.getLogger("enriched_workbench").setLevel(logging.DEBUG)
    logger.info("Starting %s...", args.command)

    start = time.perf_counter()
    document = None
    notes: List[str] = []
    try:
        reports, document, notes = COMMANDS[args.command](args)
    except CoverageGap as error:
        logger.error("%s", error)
        reports = [_coverage_report(error)]
        notes = [str(error)]
        document = None
    except WorkbenchError as error:
        logger.error("Input rejected: %s", error)
        return EXIT_INPUT
    except Exception:  # pylint: disable=broad-except
        logger.error("Unexpected error.", exc_info=True)
        return EXIT_INPUT
    elapsed = int((time.perf_counter() - start) * 1000)

    run = RunReport.from_reports(args.command, reports, elapsed, notes)
    _emit(args, run, document)
    logger.info("%s finished: %s.", args.command, run.verdict)
    return run.exit_code


if __name__ == "__main__":
    sys.exit(main())
