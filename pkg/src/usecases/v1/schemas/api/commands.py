"""Inputs and outputs of the one-shot commands."""
from pathlib import Path
from typing import Literal

from pydantic import BaseModel

from src.usecases.v1.schemas.base.matrix_document import MatrixDocument

GroupVerdict = Literal["symplectic", "antisymplectic", "neither"]


class BlockwiseReport(BaseModel):
    atc_symmetry: float
    btd_symmetry: float
    cross_identity: float
    holds: bool


class CheckResult(BaseModel):
    """Output: group membership of S with the defect norms behind it."""

    n: int
    verdict: GroupVerdict
    symplectic_defect: float
    antisymplectic_defect: float
    blockwise: BlockwiseReport


class BlockConditionsReport(BaseModel):
    first: bool
    second: bool
    third: bool


class ClassifyResult(BaseModel):
    """Output: what the sufficient conditions say about Phi_S."""

    n: int
    verdict: str
    min_eigenvalue: float
    is_real: bool
    is_purely_imaginary: bool
    is_symplectic: bool
    is_antisymplectic: bool
    conditions: BlockConditionsReport


class ActInput(BaseModel):
    """Input: S, the point Z and an optional destination for the image."""

    s: MatrixDocument
    z: MatrixDocument
    out: Path | None = None


class ActResult(BaseModel):
    """
    Output: the status of Phi_S(Z) and, unless the denominator is singular,
    the image as a document. `cond_f` is None when F is singular.
    """

    status: str
    cond_f: float | None
    symmetry_defect: float
    image: MatrixDocument | None = None
    null_vector_re: list[float] | None = None
    null_vector_im: list[float] | None = None


class DistInput(BaseModel):
    z1: MatrixDocument
    z2: MatrixDocument
    lower: bool = False
    path_steps: int | None = None


class DistResult(BaseModel):
    """Output: the closed-form distance, plus the path bound if asked."""

    space: Literal["upper", "lower"]
    distance: float
    operator_norm: float
    path_steps: int | None = None
    path_length: float | None = None
    gap: float | None = None
