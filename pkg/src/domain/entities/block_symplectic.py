"""
This module defines the 2n x 2n block matrices acted on by the Möbius map:
`BlockSymplectic`, the standard skew form `StandardJ`, and the
self-adjoint 2 x 2 block split `SelfAdjointBlocks`.

No symplectic property is assumed at construction; the predicates live in
`src.domain.services.symplectic`.
"""
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from src.domain.exceptions import DimensionMismatchError, NotHermitianError
from src.domain.value_objects.matrix import (
    ComplexMatrix,
    complex_matrix,
    frozen,
    max_abs,
)
from src.domain.value_objects.tolerance import Tolerance


@dataclass(frozen=True)
class BlockSymplectic:
    """
    A 2n x 2n complex matrix S = [[A, B], [C, D]] with n x n block views.

    Attributes:
        s: The full matrix, read-only.
    """

    s: ComplexMatrix

    def __post_init__(self) -> None:
        """Validates the shape: square with even order."""
        rows, cols = self.s.shape
        if rows != cols or rows % 2:
            raise DimensionMismatchError("(2n, 2n)", str(self.s.shape))

    @classmethod
    def of(cls, values: ArrayLike) -> "BlockSymplectic":
        """Builds a block matrix from raw values, validating finiteness."""
        return cls(complex_matrix(values))

    @classmethod
    def from_blocks(
        cls,
        a: ArrayLike,
        b: ArrayLike,
        c: ArrayLike,
        d: ArrayLike,
    ) -> "BlockSymplectic":
        """
        Assembles [[A, B], [C, D]] from four n x n blocks.

        Blocks may be nested lists or arrays; each is read as one matrix.

        Raises:
            DimensionMismatchError: If a block is not square n x n.
        """
        aa, bb, cc, dd = (
            np.asarray(block, dtype=np.complex128) for block in (a, b, c, d)
        )
        n = aa.shape[0] if aa.ndim == 2 else 0
        for block in (aa, bb, cc, dd):
            if n < 1 or block.shape != (n, n):
                raise DimensionMismatchError("(n, n)", str(block.shape))
        return cls.of(np.block([[aa, bb], [cc, dd]]))

    @property
    def n(self) -> int:
        """Block dimension."""
        return int(self.s.shape[0] // 2)

    @property
    def a(self) -> ComplexMatrix:
        return self.s[: self.n, : self.n]

    @property
    def b(self) -> ComplexMatrix:
        return self.s[: self.n, self.n :]

    @property
    def c(self) -> ComplexMatrix:
        return self.s[self.n :, : self.n]

    @property
    def d(self) -> ComplexMatrix:
        return self.s[self.n :, self.n :]

    def __matmul__(self, other: "BlockSymplectic") -> "BlockSymplectic":
        """Matrix product, so chains read like the group law."""
        if other.n != self.n:
            raise DimensionMismatchError(
                f"({2 * self.n}, {2 * self.n})", str(other.s.shape)
            )
        return BlockSymplectic(frozen(self.s @ other.s))

    def scaled(self, factor: complex) -> "BlockSymplectic":
        """Returns factor * S."""
        return BlockSymplectic(frozen(factor * self.s))

    def is_real(self, tol: Tolerance) -> bool:
        """max |Im(entry)| <= sym_tol * max(1, ||S||_max)."""
        return max_abs(self.s.imag) <= tol.sym_tol * max(1.0, max_abs(self.s))

    def is_purely_imaginary(self, tol: Tolerance) -> bool:
        """max |Re(entry)| <= sym_tol * max(1, ||S||_max)."""
        return max_abs(self.s.real) <= tol.sym_tol * max(1.0, max_abs(self.s))


@dataclass(frozen=True)
class StandardJ:
    """The standard skew form J = [[O, I], [-I, O]] of block dimension n."""

    n: int
    value: ComplexMatrix

    def as_block(self) -> BlockSymplectic:
        return BlockSymplectic(self.value)


@dataclass(frozen=True)
class SelfAdjointBlocks:
    """
    A self-adjoint block matrix M = [[alpha, beta], [beta*, gamma]].

    Use `split` to build one; it checks that alpha and gamma are Hermitian.
    """

    alpha: ComplexMatrix
    beta: ComplexMatrix
    gamma: ComplexMatrix

    @classmethod
    def split(cls, m: ComplexMatrix, tol: Tolerance) -> "SelfAdjointBlocks":
        """
        Splits a 2n x 2n self-adjoint matrix into its blocks.

        Raises:
            NotHermitianError: If `m` is not self-adjoint within sym_tol.
        """
        rows, cols = m.shape
        if rows != cols or rows % 2:
            raise DimensionMismatchError("(2n, 2n)", str(m.shape))
        defect = max_abs(m - m.conj().T)
        if defect > tol.sym_tol * max(1.0, max_abs(m)):
            raise NotHermitianError(defect)
        n = rows // 2
        return cls(
            alpha=frozen(m[:n, :n]),
            beta=frozen(m[:n, n:]),
            gamma=frozen(m[n:, n:]),
        )

    @property
    def n(self) -> int:
        return int(self.alpha.shape[0])

    def assemble(self) -> ComplexMatrix:
        """Reassembles M with beta* in the lower-left block."""
        return frozen(
            np.block(
                [[self.alpha, self.beta], [self.beta.conj().T, self.gamma]]
            )
        )
