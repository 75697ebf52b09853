import math
from pathlib import Path

import numpy as np
import pytest
from numpy.testing import assert_allclose
from pydantic import ValidationError

from src.domain.entities.siegel_point import ActionStatus
from src.domain.exceptions import (
    DimensionMismatchError,
    ImaginaryPartNotNDError,
    ImaginaryPartNotPDError,
)
from src.domain.services.symplectic import standard_j
from src.usecases.exceptions import DocumentKindError, NotInEitherGroupError
from src.usecases.v1.commands.act import ActOnPoint
from src.usecases.v1.commands.check import CheckMembership
from src.usecases.v1.commands.classify import ClassifyAction
from src.usecases.v1.commands.dist import MeasureDistance
from src.usecases.v1.schemas.api.commands import ActInput, DistInput
from src.usecases.v1.schemas.base.matrix_document import MatrixDocument


def _symplectic_doc(matrix) -> MatrixDocument:
    return MatrixDocument.from_matrix(
        np.asarray(matrix, dtype=complex), "symplectic"
    )


def _point_doc(matrix) -> MatrixDocument:
    return MatrixDocument.from_matrix(
        np.asarray(matrix, dtype=complex), "siegel_point"
    )


class TestMatrixDocument:
    def test_symplectic_documents_are_2n_square(self):
        with pytest.raises(ValidationError):
            MatrixDocument(
                kind="symplectic", n=2, re=[[1.0, 0.0]], im=[[0.0, 0.0]]
            )

    def test_parts_must_agree(self):
        with pytest.raises(ValidationError):
            MatrixDocument(n=1, re=[[1.0]], im=[[0.0, 1.0]])

    def test_non_finite_entries_are_rejected(self):
        with pytest.raises(ValidationError):
            MatrixDocument(n=1, re=[[float("nan")]], im=[[0.0]])

    def test_to_matrix(self):
        doc = MatrixDocument(n=1, re=[[0.1]], im=[[-2.0]])
        assert doc.to_matrix()[0, 0] == complex(0.1, -2.0)


class TestCheckMembership:
    @pytest.mark.parametrize(
        "matrix, verdict",
        [
            (standard_j(2).value, "symplectic"),
            (1j * np.eye(4), "antisymplectic"),
            (np.zeros((4, 4)), "neither"),
        ],
    )
    def test_verdicts(self, matrix, verdict, tol):
        result = CheckMembership(tol).execute(_symplectic_doc(matrix))
        assert result.verdict == verdict
        assert result.n == 2

    def test_reports_defects(self, example_one, tol):
        result = CheckMembership(tol).execute(
            _symplectic_doc(example_one(2).s)
        )
        assert result.symplectic_defect == pytest.approx(0.0, abs=1e-15)
        assert result.antisymplectic_defect == pytest.approx(2.0)
        assert result.blockwise.holds

    def test_rejects_point_documents(self, tol):
        with pytest.raises(DocumentKindError):
            CheckMembership(tol).execute(_point_doc(1j * np.eye(2)))


class TestClassifyAction:
    def test_example_one(self, example_one, tol):
        result = ClassifyAction(tol).execute(
            _symplectic_doc(example_one(2).s)
        )
        assert result.verdict == "Undetermined"
        assert result.min_eigenvalue == pytest.approx(-1.0 - math.sqrt(5))
        assert result.is_symplectic
        assert not result.conditions.first

    def test_j_preserves(self, tol):
        result = ClassifyAction(tol).execute(
            _symplectic_doc(standard_j(3).value)
        )
        assert result.verdict == "PreservesSiegel"
        assert result.is_real

    def test_matrix_outside_both_groups(self, tol):
        with pytest.raises(NotInEitherGroupError) as info:
            ClassifyAction(tol).execute(_symplectic_doc(np.zeros((2, 2))))
        assert info.value.symplectic_defect == pytest.approx(1.0)


class TestActOnPoint:
    def test_example_one(self, example_one, store, tol):
        payload = ActInput(
            s=_symplectic_doc(example_one(2).s),
            z=_point_doc(1j * np.eye(2)),
        )
        result = ActOnPoint(tol, store).execute(payload)
        assert result.status == ActionStatus.IN_LOWER
        assert result.cond_f == pytest.approx(1.0)
        assert result.image is not None
        assert result.image.kind == "siegel_point"
        assert_allclose(result.image.to_matrix(), -2j * np.eye(2))
        assert store.documents == {}

    def test_image_is_saved_when_asked(self, store, tol):
        out = Path("image.json")
        payload = ActInput(
            s=_symplectic_doc(np.eye(2)),
            z=_point_doc([[0.5 + 2j]]),
            out=out,
        )
        result = ActOnPoint(tol, store).execute(payload)
        assert result.status == ActionStatus.IN_UPPER
        assert store.documents[out] == result.image

    def test_lower_points_are_accepted(self, tol, store):
        payload = ActInput(
            s=_symplectic_doc(1j * np.eye(2)),
            z=_point_doc([[-1j]]),
        )
        result = ActOnPoint(tol, store).execute(payload)
        assert result.status == ActionStatus.IN_LOWER

    def test_singular_denominator(self, tol, store):
        s = [
            [0.0, -1.0],
            [1.0, -1j],
        ]
        payload = ActInput(
            s=_symplectic_doc(s), z=_point_doc([[1j]]), out=Path("x.json")
        )
        result = ActOnPoint(tol, store).execute(payload)
        assert result.status == ActionStatus.SINGULAR_DENOMINATOR
        assert result.cond_f is None
        assert result.image is None
        assert result.null_vector_re is not None
        assert store.documents == {}

    def test_dimension_mismatch(self, tol, store):
        payload = ActInput(
            s=_symplectic_doc(np.eye(4)), z=_point_doc([[1j]])
        )
        with pytest.raises(DimensionMismatchError):
            ActOnPoint(tol, store).execute(payload)

    def test_degenerate_point_is_rejected(self, tol, store):
        payload = ActInput(
            s=_symplectic_doc(np.eye(2)), z=_point_doc([[1.0]])
        )
        with pytest.raises(ImaginaryPartNotPDError):
            ActOnPoint(tol, store).execute(payload)


class TestMeasureDistance:
    def test_closed_form(self, tol):
        result = MeasureDistance(tol).execute(
            DistInput(
                z1=_point_doc(1j * np.eye(2)), z2=_point_doc(2j * np.eye(2))
            )
        )
        assert result.space == "upper"
        assert result.distance == pytest.approx(math.log(2.0))
        assert result.path_length is None

    def test_with_path(self, tol):
        result = MeasureDistance(tol).execute(
            DistInput(
                z1=_point_doc([[1j]]), z2=_point_doc([[2j]]), path_steps=256
            )
        )
        assert result.path_steps == 256
        assert result.gap is not None
        assert abs(result.gap) < 1e-5

    def test_lower_space(self, tol):
        result = MeasureDistance(tol).execute(
            DistInput(
                z1=_point_doc([[-1j]]), z2=_point_doc([[-2j]]), lower=True
            )
        )
        assert result.space == "lower"
        assert result.distance == pytest.approx(math.log(2.0))

    def test_lower_flag_requires_lower_points(self, tol):
        with pytest.raises(ImaginaryPartNotNDError):
            MeasureDistance(tol).execute(
                DistInput(
                    z1=_point_doc([[1j]]), z2=_point_doc([[2j]]), lower=True
                )
            )
