"""
This module provides dependency injection (DI) factories for the one-shot
commands: the shared tolerance, the document store and one use case per
command.

Every factory is wrapped in `functools.lru_cache`, so a tolerance value
maps to a single set of use case instances for the life of the process.
"""
import functools

from src.adapters.storage.json_document_store import JsonDocumentStore
from src.config.settings import settings
from src.domain.value_objects.tolerance import Tolerance
from src.usecases.ports.document_store_interface import IDocumentStore
from src.usecases.v1.commands.act import ActOnPoint
from src.usecases.v1.commands.check import CheckMembership
from src.usecases.v1.commands.classify import ClassifyAction
from src.usecases.v1.commands.dist import MeasureDistance

# --- 1. Shared values ---


@functools.lru_cache
def get_tolerance(override: float | None = None) -> Tolerance:
    """
    Returns the tolerance from the settings, or a uniform one.

    Args:
        override: The `--tol` flag; sets all three slacks when given.

    Raises:
        InvalidToleranceError: If a value lies outside (0, 1e-3].
    """
    if override is not None:
        return Tolerance.uniform(override)
    return Tolerance(
        sym_tol=settings.SYM_TOL,
        psd_tol=settings.PSD_TOL,
        eq_tol=settings.EQ_TOL,
    )


# --- 2. Adapters ---


@functools.lru_cache
def get_document_store() -> IDocumentStore:
    """Returns a singleton JSON document store."""
    return JsonDocumentStore()


# --- 3. UseCase Factories ---


@functools.lru_cache
def get_check_membership_uc(tol: float | None = None) -> CheckMembership:
    return CheckMembership(tol=get_tolerance(tol))


@functools.lru_cache
def get_classify_action_uc(tol: float | None = None) -> ClassifyAction:
    return ClassifyAction(tol=get_tolerance(tol))


@functools.lru_cache
def get_act_on_point_uc(tol: float | None = None) -> ActOnPoint:
    return ActOnPoint(tol=get_tolerance(tol), store=get_document_store())


@functools.lru_cache
def get_measure_distance_uc(tol: float | None = None) -> MeasureDistance:
    return MeasureDistance(tol=get_tolerance(tol))
