"""
Command handlers for `siegel`.

Each handler loads its documents, runs one use case and prints the result.
Exit codes are a stable contract:

- 0: success.
- 1: a property suite recorded at least one failure.
- 2: usage, parse, kind, dimension, unknown suite or domain validation
  error, and any unexpected exception.
- 3: the Möbius denominator CZ + D was singular.
"""
import argparse
import sys
from collections.abc import Callable, Sequence
from enum import IntEnum

from loguru import logger
from pydantic import ValidationError

from src.adapters.cli.parser import build_parser
from src.adapters.storage.json_document_store import (
    describe_validation_error,
)
from src.di.v1.get_command_uc import (
    get_act_on_point_uc,
    get_check_membership_uc,
    get_classify_action_uc,
    get_document_store,
    get_measure_distance_uc,
)
from src.di.v1.get_propcheck_uc import (
    get_run_property_suite_uc,
    get_suite_registry,
)
from src.domain.entities.siegel_point import ActionStatus
from src.domain.exceptions import DomainError
from src.usecases.exceptions import UsecaseError
from src.usecases.v1.propcheck.runner import SuiteRequest
from src.usecases.v1.schemas.api.commands import ActInput, DistInput


class ExitCode(IntEnum):
    OK = 0
    PROPERTY_FAILURE = 1
    USAGE_ERROR = 2
    SINGULAR_DENOMINATOR = 3


def _err(message: str) -> None:
    print(message, file=sys.stderr)


def check(args: argparse.Namespace) -> ExitCode:
    """Prints the group verdict of S with its defect norms."""
    document = get_document_store().load(args.s)
    result = get_check_membership_uc(args.tol).execute(document)
    blocks = result.blockwise
    print(f"verdict: {result.verdict}")
    print(f"n: {result.n}")
    print(f"symplectic defect: {result.symplectic_defect:.3e}")
    print(f"antisymplectic defect: {result.antisymplectic_defect:.3e}")
    print(f"A^tC symmetric: {blocks.atc_symmetry:.3e}")
    print(f"B^tD symmetric: {blocks.btd_symmetry:.3e}")
    print(f"A^tD - C^tB = I: {blocks.cross_identity:.3e}")
    print(f"block conditions hold: {blocks.holds}")
    return ExitCode.OK


def classify(args: argparse.Namespace) -> ExitCode:
    """Prints the verdict of the i(S*JS - J) test and the conditions."""
    document = get_document_store().load(args.s)
    result = get_classify_action_uc(args.tol).execute(document)
    conditions = result.conditions
    print(f"verdict: {result.verdict}")
    print(f"min eigenvalue of i(S*JS - J): {result.min_eigenvalue:.12g}")
    print(f"real: {result.is_real}")
    print(f"purely imaginary: {result.is_purely_imaginary}")
    print(f"symplectic: {result.is_symplectic}")
    print(f"antisymplectic: {result.is_antisymplectic}")
    print(f"block condition 1: {conditions.first}")
    print(f"block condition 2: {conditions.second}")
    print(f"block condition 3: {conditions.third}")
    return ExitCode.OK


def act(args: argparse.Namespace) -> ExitCode:
    """
    Writes the image document to stdout and the status line to stderr.
    """
    store = get_document_store()
    payload = ActInput(
        s=store.load(args.s), z=store.load(args.z), out=args.out
    )
    result = get_act_on_point_uc(args.tol).execute(payload)
    cond = "inf" if result.cond_f is None else f"{result.cond_f:.3e}"
    if result.image is not None:
        print(store.render(result.image))
    _err(f"status: {result.status} cond(F): {cond}")
    if result.status == ActionStatus.SINGULAR_DENOMINATOR:
        if result.null_vector_re is not None:
            _err(f"null vector (re): {result.null_vector_re}")
            _err(f"null vector (im): {result.null_vector_im}")
        return ExitCode.SINGULAR_DENOMINATOR
    return ExitCode.OK


def dist(args: argparse.Namespace) -> ExitCode:
    """Prints the distance and, with --path, the path bound and gap."""
    store = get_document_store()
    payload = DistInput(
        z1=store.load(args.z1),
        z2=store.load(args.z2),
        lower=args.lower,
        path_steps=args.path,
    )
    result = get_measure_distance_uc(args.tol).execute(payload)
    print(f"distance: {result.distance:.12g}")
    if result.path_length is not None and result.gap is not None:
        print(
            f"path length (k={result.path_steps}): "
            f"{result.path_length:.12g}"
        )
        print(f"gap: {result.gap:.3e}")
    return ExitCode.OK


def propcheck(args: argparse.Namespace) -> ExitCode:
    """Runs a suite; the exit code is 1 when any trial failed."""
    request = SuiteRequest(
        suite=args.suite,
        seed=args.seed,
        trials=args.trials,
        n=args.n,
        workers=args.workers,
        json_path=args.json_path,
    )
    report = get_run_property_suite_uc(args.tol).execute(request)
    print(
        f"{report.suite}: seed {report.seed}, {report.trials} trials, "
        f"{len(report.failures)} failure(s), "
        f"max defect {report.max_defect:.3e}, "
        f"{report.wall_time:.2f}s"
    )
    for label, count in report.tallies.items():
        print(f"  {label}: {count}")
    for failure in report.failures:
        print(
            f"  trial {failure.trial}: {failure.observed} "
            f"(expected {failure.expected})"
        )
    if report.candidates:
        print(f"  {len(report.candidates)} candidate(s) for inspection")
    if report.passed:
        return ExitCode.OK
    return ExitCode.PROPERTY_FAILURE


def suites(args: argparse.Namespace) -> ExitCode:
    for suite in get_suite_registry():
        dims = ",".join(str(n) for n in suite.dims)
        print(f"{suite.name:<24} n={dims:<8} {suite.description}")
    return ExitCode.OK


COMMANDS: dict[str, Callable[[argparse.Namespace], ExitCode]] = {
    "check": check,
    "classify": classify,
    "act": act,
    "dist": dist,
    "propcheck": propcheck,
    "suites": suites,
}


def dispatch(args: argparse.Namespace) -> int:
    """
    Runs the selected command and maps its errors to exit codes.

    Returns:
        The process exit code.
    """
    try:
        return int(COMMANDS[args.command](args))
    except ValidationError as e:
        logger.warning(f"Invalid input: {e}")
        _err(f"siegel: error: {describe_validation_error(e)}")
    except (UsecaseError, DomainError) as e:
        logger.warning(f"{type(e).__name__}: {e}")
        _err(f"siegel: error: {e}")
    except Exception as e:
        logger.exception(f"Unhandled error in '{args.command}': {e}")
        _err("siegel: error: an internal error occurred.")
    return int(ExitCode.USAGE_ERROR)


def run(argv: Sequence[str] | None = None) -> int:
    """Parses `argv` and dispatches; argparse exits with 2 on bad usage."""
    return dispatch(build_parser().parse_args(argv))
