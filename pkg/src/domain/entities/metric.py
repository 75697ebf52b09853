"""
This module defines the inputs and reports of the Finsler metric
machinery: tangent vectors, distance reports, discretized paths and the
results of the isometry, contraction and compression checks.
"""
from dataclasses import dataclass, field
from enum import StrEnum

from src.domain.entities.block_symplectic import BlockSymplectic
from src.domain.entities.siegel_point import SiegelPoint
from src.domain.value_objects.matrix import ComplexMatrix


@dataclass(frozen=True)
class TangentVector:
    """A complex symmetric W in the tangent space at `at`."""

    at: SiegelPoint
    w: ComplexMatrix


class DistanceMethod(StrEnum):
    CLOSED_FORM = "closed_form"
    PATH_UPPER_BOUND = "path_upper_bound"


@dataclass(frozen=True)
class DistanceReport:
    """
    A distance with the intermediates that produced it.

    For the closed form, value = 2 ln(operator_norm_used) where
    operator_norm_used = max(1, ||S1^-1 S2||). For a path bound, value is
    the discretized length and operator_norm_used = exp(value / 2).
    """

    value: float
    method: DistanceMethod
    s1_norm_arg: BlockSymplectic
    s2_norm_arg: BlockSymplectic
    operator_norm_used: float


@dataclass(frozen=True)
class PathSample:
    """Points Z(t_0), ..., Z(t_k) at uniform parameters in [0, 1]."""

    points: tuple[SiegelPoint, ...]

    @property
    def k(self) -> int:
        return len(self.points) - 1


@dataclass(frozen=True)
class IsometryCheck:
    """d-(Phi_S Z1, Phi_S Z2) against d(Z1, Z2)."""

    lhs: float
    rhs: float
    defect: float


@dataclass(frozen=True)
class ContractionReport:
    """
    Distance ratios under a translation-type map.

    Attributes:
        max_ratio: Largest ratio over the non-degenerate pairs (0 if none).
        ratios: One ratio per non-degenerate pair, in input order.
        excluded: Indices of pairs skipped because d(Z1, Z2) was ~0.
        pointwise_bounds: The largest pointwise contraction factor at the
            endpoints of each non-degenerate pair.
    """

    max_ratio: float
    ratios: tuple[float, ...]
    excluded: tuple[int, ...] = field(default_factory=tuple)
    pointwise_bounds: tuple[float, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class CompressionCheck:
    """Hyperbolic distance of v*Z1v, v*Z2v against d(Z1, Z2)."""

    lhs: float
    rhs: float
    holds: bool
