"""
The wire format for matrices.

A document stores the real and imaginary parts as separate nested lists of
floats, since JSON has no complex numbers. Floats are written in their
shortest round-trip form, so a re-parsed document is bit-identical.
"""
from typing import Literal, Self

import numpy as np
from pydantic import BaseModel, ConfigDict, FiniteFloat, model_validator

from src.domain.value_objects.matrix import ComplexMatrix, complex_matrix

DocumentKind = Literal["matrix", "siegel_point", "symplectic"]


class MatrixDocument(BaseModel):
    """
    A dense complex matrix with a kind tag.

    Attributes:
        kind: "symplectic" documents are 2n x 2n; the others are n x n.
        n: The block dimension.
        re: Real parts, row by row.
        im: Imaginary parts, same shape as `re`.
    """

    model_config = ConfigDict(frozen=True)

    kind: DocumentKind = "matrix"
    n: int
    re: list[list[FiniteFloat]]
    im: list[list[FiniteFloat]]

    @model_validator(mode="after")
    def check_shape(self) -> Self:
        """Rows are equal length, parts agree and the kind fits n."""
        side = 2 * self.n if self.kind == "symplectic" else self.n
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        for name, part in (("re", self.re), ("im", self.im)):
            if len(part) != side or any(len(row) != side for row in part):
                raise ValueError(
                    f"'{name}' must be {side} x {side} for a "
                    f"{self.kind} document with n={self.n}"
                )
        return self

    def to_matrix(self) -> ComplexMatrix:
        return complex_matrix(
            np.array(self.re, dtype=np.float64)
            + 1j * np.array(self.im, dtype=np.float64)
        )

    @classmethod
    def from_matrix(
        cls, matrix: ComplexMatrix, kind: DocumentKind = "matrix"
    ) -> "MatrixDocument":
        """Builds a document; n is half the order for symplectic kinds."""
        rows = int(matrix.shape[0])
        return cls(
            kind=kind,
            n=rows // 2 if kind == "symplectic" else rows,
            re=matrix.real.tolist(),
            im=matrix.imag.tolist(),
        )
