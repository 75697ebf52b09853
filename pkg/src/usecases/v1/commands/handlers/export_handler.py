"""
This module defines the `ExportHandler`, the last link of the act chain: it
turns the outcome into an `ActResult` and, when asked, saves the image.
"""
import math

from loguru import logger

from src.domain.entities.siegel_point import ActionStatus
from src.usecases.ports.cor_handler_interface import IHandler
from src.usecases.ports.document_store_interface import IDocumentStore
from src.usecases.v1.schemas.api.commands import ActResult
from src.usecases.v1.schemas.base.act_context import ActContext
from src.usecases.v1.schemas.base.matrix_document import (
    DocumentKind,
    MatrixDocument,
)

POINT_STATUSES = (ActionStatus.IN_UPPER, ActionStatus.IN_LOWER)


class ExportHandler(IHandler[ActContext]):
    """3. Builds the result document and writes it if a path was given."""

    def __init__(
        self,
        store: IDocumentStore,
        next_handler: IHandler[ActContext] | None = None,
    ):
        super().__init__(next_handler)
        self.store = store

    def handle(self, context: ActContext) -> ActContext:
        outcome = context.outcome
        if outcome is None:
            raise RuntimeError("ExportHandler needs an action outcome.")
        kind: DocumentKind = (
            "siegel_point" if outcome.status in POINT_STATUSES else "matrix"
        )
        image = (
            None
            if outcome.image is None
            else MatrixDocument.from_matrix(outcome.image, kind)
        )
        null = outcome.null_vector
        context.result = ActResult(
            status=outcome.status.value,
            cond_f=outcome.cond_f if math.isfinite(outcome.cond_f) else None,
            symmetry_defect=outcome.symmetry_defect,
            image=image,
            null_vector_re=None if null is None else null.real.tolist(),
            null_vector_im=None if null is None else null.imag.tolist(),
        )
        out = context.dto.out
        if out is not None and image is not None:
            self.store.save(image, out)
            logger.info(f"Image written to {out}.")
        return super().handle(context)
