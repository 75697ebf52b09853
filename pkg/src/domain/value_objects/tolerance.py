"""
This module defines the `Tolerance` value object shared by every numerical
predicate in the domain.

It validates its fields upon instantiation, so a `Tolerance` that exists is
always usable.
"""
from dataclasses import dataclass

from src.domain.exceptions import InvalidToleranceError

MAX_TOLERANCE = 1e-3


@dataclass(frozen=True)
class Tolerance:
    """
    Value Object holding the three numerical slacks.

    Attributes:
        sym_tol: Entrywise slack for symmetry and Hermiticity checks,
            relative to max(1, largest entry).
        psd_tol: Eigenvalue slack for semidefiniteness and the relative
            singular-value cut of the pseudo-inverse.
        eq_tol: Entrywise slack for matrix-equality assertions.
    """

    sym_tol: float = 1e-9
    psd_tol: float = 1e-9
    eq_tol: float = 1e-9

    def __post_init__(self) -> None:
        """Fails fast on a tolerance outside (0, 1e-3]."""
        for name in ("sym_tol", "psd_tol", "eq_tol"):
            value = getattr(self, name)
            if not 0.0 < value <= MAX_TOLERANCE:
                raise InvalidToleranceError(name, value)

    @classmethod
    def uniform(cls, value: float) -> "Tolerance":
        """Builds a tolerance with the same value in all three slots."""
        return cls(sym_tol=value, psd_tol=value, eq_tol=value)
