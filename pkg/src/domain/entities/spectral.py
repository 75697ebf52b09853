"""
This module defines the results returned by the spectral primitives: a
Hermitian eigendecomposition and the verdict of a semidefiniteness test.
"""
from dataclasses import dataclass

from src.domain.value_objects.matrix import ComplexMatrix, RealVector


@dataclass(frozen=True)
class EigenDecomposition:
    """Ascending eigenvalues and the unitary matrix of eigenvectors."""

    eigenvalues: RealVector
    eigenvectors: ComplexMatrix


@dataclass(frozen=True)
class PsdVerdict:
    """
    Outcome of a positive-semidefiniteness test.

    Attributes:
        holds: True when the smallest eigenvalue clears the slack.
        min_eigenvalue: The smallest eigenvalue found.
        witness: The eigenvector of `min_eigenvalue` when `holds` is False.
    """

    holds: bool
    min_eigenvalue: float
    witness: ComplexMatrix | None = None
