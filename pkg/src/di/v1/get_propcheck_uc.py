"""
Dependency Injection for the property suite runner.

Suites are registered at import time of `suites`; the registry handed to
the runner is that module-level instance.
"""
import functools

from src.adapters.storage.json_report_writer import JsonReportWriter
from src.config.settings import settings
from src.di.v1.get_command_uc import get_tolerance
from src.usecases.ports.report_writer_interface import IReportWriter
from src.usecases.v1.propcheck.registry import SuiteRegistry
from src.usecases.v1.propcheck.runner import RunPropertySuite
from src.usecases.v1.propcheck.suites import REGISTRY


@functools.lru_cache
def get_report_writer() -> IReportWriter:
    """Returns a singleton JSON report writer."""
    return JsonReportWriter()


def get_suite_registry() -> SuiteRegistry:
    return REGISTRY


@functools.lru_cache
def get_run_property_suite_uc(
    tol: float | None = None,
) -> RunPropertySuite:
    """
    Main factory for the RunPropertySuite use case.

    Args:
        tol: The `--tol` flag, if given.

    Returns:
        A runner wired to the suite registry and the JSON report writer.
    """
    return RunPropertySuite(
        registry=get_suite_registry(),
        tol=get_tolerance(tol),
        writer=get_report_writer(),
        samples_per_map=settings.SUITE_SAMPLES_PER_MAP,
        path_steps=settings.PATH_STEPS,
    )
