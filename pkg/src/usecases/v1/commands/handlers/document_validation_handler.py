"""
This module defines the `DocumentValidationHandler`, the first link of the
act chain: it turns the two documents into a block matrix and a validated
point of the upper or lower space.
"""
from loguru import logger

from src.domain.exceptions import DimensionMismatchError
from src.domain.value_objects.tolerance import Tolerance
from src.usecases.ports.cor_handler_interface import IHandler
from src.usecases.v1.commands.documents import as_block, as_point
from src.usecases.v1.schemas.base.act_context import ActContext


class DocumentValidationHandler(IHandler[ActContext]):
    """1. Builds S and Z from the documents."""

    def __init__(
        self,
        tol: Tolerance,
        next_handler: IHandler[ActContext] | None = None,
    ):
        super().__init__(next_handler)
        self.tol = tol

    def handle(self, context: ActContext) -> ActContext:
        """
        Raises:
            DocumentKindError: If S is not a symplectic document or Z is
                not a point document.
            DimensionMismatchError: If Z is not n x n for the 2n x 2n S.
        """
        s = as_block(context.dto.s)
        z = as_point(context.dto.z, self.tol)
        if z.n != s.n:
            raise DimensionMismatchError(f"({s.n}, {s.n})", str(z.z.shape))
        logger.debug(f"Validated S ({s.n}-block) and Z.")
        context.s = s
        context.z = z
        return super().handle(context)
