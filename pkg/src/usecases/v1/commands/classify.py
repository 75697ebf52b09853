"""
This module defines the use case behind `siegel classify`.

The verdict only reports sufficient conditions; `Undetermined` is never a
claim that the action is ill defined.
"""
from loguru import logger

from src.domain.services.symplectic import (
    antisymplectic_defect,
    classifier_block_conditions,
    classify_action,
    symplectic_defect,
)
from src.domain.value_objects.tolerance import Tolerance
from src.usecases.exceptions import NotInEitherGroupError
from src.usecases.ports.usecase_interface import IUsecase
from src.usecases.v1.commands.documents import as_block
from src.usecases.v1.schemas.api.commands import (
    BlockConditionsReport,
    ClassifyResult,
)
from src.usecases.v1.schemas.base.matrix_document import MatrixDocument


class ClassifyAction(IUsecase[MatrixDocument, ClassifyResult]):
    """Use Case: verdict of the i(S*JS - J) test and the block conditions."""

    def __init__(self, tol: Tolerance):
        self.tol = tol

    def execute(self, input_data: MatrixDocument) -> ClassifyResult:
        """
        Executes the use case.

        Raises:
            NotInEitherGroupError: If S is neither symplectic nor
                antisymplectic.
        """
        s = as_block(input_data)
        classification = classify_action(s, self.tol)
        notes = classification.notes
        if not (notes.is_symplectic or notes.is_antisymplectic):
            raise NotInEitherGroupError(
                symplectic_defect(s), antisymplectic_defect(s)
            )
        conditions = classifier_block_conditions(s, self.tol)
        logger.info(
            f"Classified {s.n}-block matrix as {classification.verdict} "
            f"(min eigenvalue {classification.min_eigenvalue:.6g})."
        )
        return ClassifyResult(
            n=s.n,
            verdict=classification.verdict.value,
            min_eigenvalue=classification.min_eigenvalue,
            is_real=notes.is_real,
            is_purely_imaginary=notes.is_purely_imaginary,
            is_symplectic=notes.is_symplectic,
            is_antisymplectic=notes.is_antisymplectic,
            conditions=BlockConditionsReport(
                first=conditions.first,
                second=conditions.second,
                third=conditions.third,
            ),
        )
