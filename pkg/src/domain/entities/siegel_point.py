"""
This module defines points of the Siegel upper half space and of its
conjugate lower space, plus the outcome of a Möbius action.

Points are only created by the validating constructors in
`src.domain.services.siegel` (or by exact conjugation of a valid point).
"""
from dataclasses import dataclass
from enum import StrEnum

from src.domain.value_objects.matrix import ComplexMatrix, frozen


@dataclass(frozen=True)
class SiegelPoint:
    """
    Z = X + iY, complex symmetric with Y positive definite.

    Attributes:
        z: The point.
        x: Real part, symmetric.
        y: Imaginary part, symmetric positive definite.
        min_eig_y: Smallest eigenvalue of Y.
    """

    z: ComplexMatrix
    x: ComplexMatrix
    y: ComplexMatrix
    min_eig_y: float

    @property
    def n(self) -> int:
        return int(self.z.shape[0])

    def conjugate(self) -> "LowerSiegelPoint":
        """X - iY, a point of the lower space."""
        return LowerSiegelPoint(
            z=frozen(self.z.conj()),
            x=self.x,
            y=frozen(-self.y),
            min_eig_neg_y=self.min_eig_y,
        )


@dataclass(frozen=True)
class LowerSiegelPoint:
    """
    Z = X + iY, complex symmetric with Y negative definite.

    Attributes:
        min_eig_neg_y: Smallest eigenvalue of -Y.
    """

    z: ComplexMatrix
    x: ComplexMatrix
    y: ComplexMatrix
    min_eig_neg_y: float

    @property
    def n(self) -> int:
        return int(self.z.shape[0])

    def conjugate(self) -> SiegelPoint:
        """X - iY, a point of the upper space."""
        return SiegelPoint(
            z=frozen(self.z.conj()),
            x=self.x,
            y=frozen(-self.y),
            min_eig_y=self.min_eig_neg_y,
        )


class ActionStatus(StrEnum):
    """Where Phi_S(Z) landed."""

    IN_UPPER = "InUpper"
    IN_LOWER = "InLower"
    SYMMETRIC_ONLY = "SymmetricOnly"
    ASYMMETRIC = "Asymmetric"
    SINGULAR_DENOMINATOR = "SingularDenominator"


@dataclass(frozen=True)
class ActionOutcome:
    """
    Phi_S(Z) = E F^-1 with E = AZ + B and F = CZ + D, plus diagnostics.

    Exactly one of `upper`, `lower`, `result` or `null_vector` describes the
    image, according to `status`:

    - IN_UPPER: `upper` is the validated image.
    - IN_LOWER: `lower` is the validated image.
    - SYMMETRIC_ONLY / ASYMMETRIC: `result` holds E F^-1.
    - SINGULAR_DENOMINATOR: `null_vector` is a near-null vector of F.

    Attributes:
        cond_f: 2-norm condition number of F (inf when singular).
        symmetry_defect: max |W - W^t| of W = E F^-1 before symmetrization.
        im_ef: Hermitian imaginary part (W - W*) / 2i of W, or None.
    """

    status: ActionStatus
    e_matrix: ComplexMatrix
    f_matrix: ComplexMatrix
    cond_f: float
    upper: SiegelPoint | None = None
    lower: LowerSiegelPoint | None = None
    result: ComplexMatrix | None = None
    null_vector: ComplexMatrix | None = None
    symmetry_defect: float = 0.0
    im_ef: ComplexMatrix | None = None

    @property
    def image(self) -> ComplexMatrix | None:
        """The computed E F^-1 whatever the status, None when singular."""
        if self.upper is not None:
            return self.upper.z
        if self.lower is not None:
            return self.lower.z
        return self.result

    @property
    def is_defined(self) -> bool:
        return self.status is not ActionStatus.SINGULAR_DENOMINATOR



@dataclass(frozen=True)
class CompositionCheck:
    """
    Both evaluations of Phi_S o Phi_R at Z and their gap.

    Attributes:
        max_defect: max |lhs - rhs| entrywise.
        bound: eq_tol * (1 + ||S|| ||R|| ||Z||), the size of the rounding
            error both evaluations can carry.
    """

    lhs: ComplexMatrix
    rhs: ComplexMatrix
    max_defect: float
    bound: float
