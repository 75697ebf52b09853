"""This module defines the use case behind `siegel dist`."""
from loguru import logger

from src.domain.entities.metric import DistanceReport
from src.domain.entities.siegel_point import SiegelPoint
from src.domain.services.metric import (
    lower_distance,
    path_upper_bound,
    siegel_distance,
)
from src.domain.value_objects.tolerance import Tolerance
from src.usecases.ports.usecase_interface import IUsecase
from src.usecases.v1.commands.documents import as_lower, as_upper
from src.usecases.v1.schemas.api.commands import DistInput, DistResult


class MeasureDistance(IUsecase[DistInput, DistResult]):
    """
    Use Case: closed-form distance in the upper or lower space.

    With `path_steps`, the straight segment between the points (between
    their conjugates in the lower space) is also measured; `gap` is the
    path length minus the distance.
    """

    def __init__(self, tol: Tolerance):
        self.tol = tol

    def _measure(
        self, input_data: DistInput
    ) -> tuple[DistanceReport, SiegelPoint, SiegelPoint]:
        if input_data.lower:
            w1 = as_lower(input_data.z1, self.tol)
            w2 = as_lower(input_data.z2, self.tol)
            report = lower_distance(w1, w2, self.tol)
            return report, w1.conjugate(), w2.conjugate()
        z1 = as_upper(input_data.z1, self.tol)
        z2 = as_upper(input_data.z2, self.tol)
        return siegel_distance(z1, z2, self.tol), z1, z2

    def execute(self, input_data: DistInput) -> DistResult:
        report, z1, z2 = self._measure(input_data)
        result = DistResult(
            space="lower" if input_data.lower else "upper",
            distance=report.value,
            operator_norm=report.operator_norm_used,
        )
        steps = input_data.path_steps
        if steps is not None:
            length = path_upper_bound(z1, z2, steps, self.tol).value
            result = result.model_copy(
                update={
                    "path_steps": steps,
                    "path_length": length,
                    "gap": length - report.value,
                }
            )
        logger.info(f"Distance {result.distance:.12g} ({result.space}).")
        return result
