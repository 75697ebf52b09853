"""
This module defines the verdicts produced by the classifier matrix
M = i(S*JS - J) and by the block positivity criterion.
"""
from dataclasses import dataclass
from enum import StrEnum

from src.domain.value_objects.matrix import ComplexMatrix


class Verdict(StrEnum):
    """What the proven theorems guarantee about the action of S."""

    PRESERVES_SIEGEL = "PreservesSiegel"
    MAPS_TO_LOWER = "MapsToLower"
    UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class ClassificationNotes:
    """Structural flags of S that feed the verdict."""

    is_real: bool
    is_purely_imaginary: bool
    is_symplectic: bool
    is_antisymplectic: bool


@dataclass(frozen=True)
class ActionClassification:
    """
    Verdict of the i(S*JS - J) test with its witnesses.

    `UNDETERMINED` never means "ill defined": only sufficient conditions are
    known.
    """

    verdict: Verdict
    m_matrix: ComplexMatrix
    min_eigenvalue: float
    notes: ClassificationNotes


class BlockCondition(StrEnum):
    """Which equivalent form of the block positivity criterion was used."""

    ALPHA_SCHUR = "alpha-schur"
    GAMMA_SCHUR = "gamma-schur"


@dataclass(frozen=True)
class BlockPsdVerdict:
    """
    Result of the pseudo-inverse block criterion.

    Attributes:
        holds: The verdict of the form named by `via`.
        via: The form used for the verdict.
        alpha_form: Verdict of (alpha >= 0, range, Schur in alpha).
        gamma_form: Verdict of (gamma >= 0, range, Schur in gamma).
    """

    holds: bool
    via: BlockCondition
    alpha_form: bool
    gamma_form: bool


@dataclass(frozen=True)
class BlockConditions:
    """The three printed conditions on A, B, C, D, evaluated literally."""

    first: bool
    second: bool
    third: bool

    def all(self) -> bool:
        return self.first and self.second and self.third


@dataclass(frozen=True)
class BlockwiseDefects:
    """Max-norm violations of the three block identities of S^tJS = J."""

    atc_symmetry: float
    btd_symmetry: float
    cross_identity: float

    def largest(self) -> float:
        return max(self.atc_symmetry, self.btd_symmetry, self.cross_identity)
