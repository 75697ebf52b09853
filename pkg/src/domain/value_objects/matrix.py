"""
This module defines the `ComplexMatrix` carrier used throughout the domain.

A `ComplexMatrix` is a two-dimensional `complex128` numpy array. Arrays are
immutable once they leave `complex_matrix`, which is the only sanctioned way
to build one from user data.
"""
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.domain.exceptions import DimensionMismatchError, NonFiniteMatrixError

ComplexMatrix = NDArray[np.complex128]
RealVector = NDArray[np.float64]
RealMatrix = NDArray[np.float64]


def complex_matrix(values: ArrayLike) -> ComplexMatrix:
    """
    Validates and freezes a dense complex matrix.

    Args:
        values: Anything numpy can turn into a 2-D array.

    Returns:
        A read-only `complex128` copy of `values`.

    Raises:
        DimensionMismatchError: If the array is not 2-D with both
            dimensions at least 1.
        NonFiniteMatrixError: If any entry is NaN or infinite.
    """
    array = np.array(values, dtype=np.complex128)
    if array.ndim != 2 or array.shape[0] < 1 or array.shape[1] < 1:
        raise DimensionMismatchError(
            "(rows >= 1, cols >= 1)", str(array.shape)
        )
    bad = int(np.count_nonzero(~np.isfinite(array)))
    if bad:
        raise NonFiniteMatrixError(bad)
    array.setflags(write=False)
    return array


def frozen(array: NDArray[Any]) -> ComplexMatrix:
    """Returns a read-only complex copy of an internally computed array."""
    out = np.array(array, dtype=np.complex128)
    out.setflags(write=False)
    return out


def max_abs(array: NDArray[Any]) -> float:
    """Largest absolute entry (the max-norm used by every equality gate)."""
    return float(np.max(np.abs(array))) if array.size else 0.0


def require_square(m: NDArray[Any]) -> int:
    """Returns the order of `m` or raises if it is not square."""
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatchError("(k, k)", str(m.shape))
    return int(m.shape[0])
