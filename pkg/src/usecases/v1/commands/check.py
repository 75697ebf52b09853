"""
This module defines the use case behind `siegel check`: membership of S in
SP(2n, C) or in its antisymplectic coset, with the defects that decide it.
"""
from loguru import logger

from src.domain.services.symplectic import (
    antisymplectic_defect,
    blockwise_defects,
    is_antisymplectic,
    is_symplectic,
    is_symplectic_blockwise,
    symplectic_defect,
)
from src.domain.value_objects.tolerance import Tolerance
from src.usecases.ports.usecase_interface import IUsecase
from src.usecases.v1.commands.documents import as_block
from src.usecases.v1.schemas.api.commands import (
    BlockwiseReport,
    CheckResult,
    GroupVerdict,
)
from src.usecases.v1.schemas.base.matrix_document import MatrixDocument


class CheckMembership(IUsecase[MatrixDocument, CheckResult]):
    """Use Case: classify S as symplectic, antisymplectic or neither."""

    def __init__(self, tol: Tolerance):
        self.tol = tol

    def execute(self, input_data: MatrixDocument) -> CheckResult:
        """
        Executes the use case.

        Raises:
            DocumentKindError: If the document is not tagged symplectic.
        """
        s = as_block(input_data)
        logger.info(f"Checking group membership of a {s.n}-block matrix.")
        verdict: GroupVerdict = "neither"
        if is_symplectic(s, self.tol):
            verdict = "symplectic"
        elif is_antisymplectic(s, self.tol):
            verdict = "antisymplectic"
        blocks = blockwise_defects(s)
        return CheckResult(
            n=s.n,
            verdict=verdict,
            symplectic_defect=symplectic_defect(s),
            antisymplectic_defect=antisymplectic_defect(s),
            blockwise=BlockwiseReport(
                atc_symmetry=blocks.atc_symmetry,
                btd_symmetry=blocks.btd_symmetry,
                cross_identity=blocks.cross_identity,
                holds=is_symplectic_blockwise(s, self.tol),
            ),
        )
