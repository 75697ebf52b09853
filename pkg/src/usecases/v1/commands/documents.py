"""
Conversions between matrix documents and domain values.

Kind tags are checked here; numerical validation is left to the domain
constructors.
"""
from src.domain.entities.block_symplectic import BlockSymplectic
from src.domain.entities.siegel_point import LowerSiegelPoint, SiegelPoint
from src.domain.exceptions import ImaginaryPartNotPDError
from src.domain.services.siegel import make_lower_siegel, make_siegel
from src.domain.value_objects.tolerance import Tolerance
from src.usecases.exceptions import DocumentKindError
from src.usecases.v1.schemas.base.matrix_document import MatrixDocument

POINT_KINDS = ("siegel_point", "matrix")


def as_block(document: MatrixDocument) -> BlockSymplectic:
    if document.kind != "symplectic":
        raise DocumentKindError("symplectic", document.kind)
    return BlockSymplectic(document.to_matrix())


def _require_point(document: MatrixDocument) -> None:
    if document.kind not in POINT_KINDS:
        raise DocumentKindError("siegel_point", document.kind)


def as_upper(document: MatrixDocument, tol: Tolerance) -> SiegelPoint:
    _require_point(document)
    return make_siegel(document.to_matrix(), tol)


def as_lower(document: MatrixDocument, tol: Tolerance) -> LowerSiegelPoint:
    _require_point(document)
    return make_lower_siegel(document.to_matrix(), tol)


def as_point(
    document: MatrixDocument, tol: Tolerance
) -> SiegelPoint | LowerSiegelPoint:
    """A point of the upper space, or of the lower one if Im Z < 0."""
    try:
        return as_upper(document, tol)
    except ImaginaryPartNotPDError as e:
        if e.min_eigenvalue >= 0.0:
            raise
        return as_lower(document, tol)
