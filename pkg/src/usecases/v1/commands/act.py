"""
This module defines the use case behind `siegel act`.

`ActOnPoint` orchestrates a Chain of Responsibility: document validation,
then the Möbius action, then export of the result.
"""
from loguru import logger

from src.domain.value_objects.tolerance import Tolerance
from src.usecases.ports.document_store_interface import IDocumentStore
from src.usecases.ports.usecase_interface import IUsecase
from src.usecases.v1.commands.handlers.action_handler import ActionHandler
from src.usecases.v1.commands.handlers.document_validation_handler import (
    DocumentValidationHandler,
)
from src.usecases.v1.commands.handlers.export_handler import ExportHandler
from src.usecases.v1.schemas.api.commands import ActInput, ActResult
from src.usecases.v1.schemas.base.act_context import ActContext


class ActOnPoint(IUsecase[ActInput, ActResult]):
    """
    Use Case: Phi_S(Z) as a document with its status.

    A singular denominator is reported in the result, not raised.
    """

    def __init__(self, tol: Tolerance, store: IDocumentStore):
        self.tol = tol
        self.store = store

    def execute(self, input_data: ActInput) -> ActResult:
        # Validation -> Action -> Export
        validation = DocumentValidationHandler(self.tol)
        validation.set_next(ActionHandler(self.tol)).set_next(
            ExportHandler(self.store)
        )
        context = validation.handle(ActContext(dto=input_data))
        if context.result is None:
            raise RuntimeError("Act chain ended without a result.")
        logger.info(f"Act finished with status {context.result.status}.")
        return context.result
