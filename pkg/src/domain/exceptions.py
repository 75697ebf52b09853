"""
This module defines custom exceptions for the domain layer.

These exceptions represent violated preconditions of the matrix, symplectic,
Siegel and metric operations. Each one keeps the offending quantity as an
attribute so callers can report it without parsing the message.
"""


class DomainError(Exception):
    """Base exception for domain errors."""

    pass


class InvalidToleranceError(DomainError):
    """Raised when a tolerance is not in the half-open range (0, 1e-3]."""

    def __init__(self, name: str, value: float):
        self.name = name
        self.value = value
        super().__init__(
            f"Tolerance '{name}' must satisfy 0 < value <= 1e-3, "
            f"got {value!r}."
        )


class NonFiniteMatrixError(DomainError):
    """Raised when a matrix holds NaN or Inf entries."""

    def __init__(self, count: int):
        self.count = count
        super().__init__(f"Matrix has {count} non-finite entries.")


class DimensionMismatchError(DomainError):
    """Raised when operand shapes are incompatible."""

    def __init__(self, expected: str, got: str):
        self.expected = expected
        self.got = got
        super().__init__(f"Expected shape {expected}, got {got}.")


class NotHermitianError(DomainError):
    """Raised when a matrix that must be self-adjoint is not."""

    def __init__(self, defect: float):
        self.defect = defect
        super().__init__(
            f"Matrix is not Hermitian (max |m - m*| = {defect:.3e})."
        )


class NotPositiveDefiniteError(DomainError):
    """Raised when a matrix that must be positive definite is not."""

    def __init__(self, min_eigenvalue: float):
        self.min_eigenvalue = min_eigenvalue
        super().__init__(
            "Matrix is not positive definite "
            f"(smallest eigenvalue {min_eigenvalue:.6e})."
        )


class NoConvergenceError(DomainError):
    """Raised when an iterative LAPACK routine fails to converge."""

    def __init__(self, operation: str):
        self.operation = operation
        super().__init__(f"'{operation}' did not converge.")


class NotSymmetricError(DomainError):
    """Raised when a point of a Siegel space is not complex symmetric."""

    def __init__(self, defect: float, index: tuple[int, int]):
        self.defect = defect
        self.index = index
        super().__init__(
            f"Matrix is not symmetric (|z - z^t| = {defect:.3e} "
            f"at entry {index})."
        )


class ImaginaryPartNotPDError(DomainError):
    """Raised when Im(Z) is not positive definite."""

    def __init__(self, min_eigenvalue: float):
        self.min_eigenvalue = min_eigenvalue
        super().__init__(
            "Imaginary part is not positive definite "
            f"(smallest eigenvalue {min_eigenvalue:.6e})."
        )


class ImaginaryPartNotNDError(DomainError):
    """Raised when Im(Z) is not negative definite."""

    def __init__(self, max_eigenvalue: float):
        self.max_eigenvalue = max_eigenvalue
        super().__init__(
            "Imaginary part is not negative definite "
            f"(largest eigenvalue {max_eigenvalue:.6e})."
        )


class NotRealSymplecticError(DomainError):
    """Raised when an operation requires a real symplectic matrix."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Matrix is not real symplectic: {reason}.")


class NotPurelyImaginarySymplecticError(DomainError):
    """Raised when an operation requires a purely imaginary symplectic."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(
            f"Matrix is not purely imaginary symplectic: {reason}."
        )


class WrongShapeError(DomainError):
    """Raised when a matrix is not of the required structured form."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Matrix has the wrong shape: {reason}.")


class ZeroVectorError(DomainError):
    """Raised when a compression vector is zero."""

    def __init__(self) -> None:
        super().__init__("Compression vector must be non-zero.")


class StabilizerCharacterizationError(DomainError):
    """Raised when a fixed point of iI fails the orthogonality check."""

    def __init__(self, defect: float):
        self.defect = defect
        super().__init__(
            "Element fixes iI but is not orthogonal of the form "
            f"[[A, B], [-B, A]] (defect {defect:.3e})."
        )


class ChainBreakError(DomainError):
    """Raised when a composed action is undefined at some stage."""

    def __init__(self, stage: int, reason: str):
        self.stage = stage
        self.reason = reason
        super().__init__(f"Action chain broke at stage {stage}: {reason}.")
