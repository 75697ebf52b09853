"""
Dense complex matrix primitives.

Every spectral need of the Siegel machinery is Hermitian or positive
definite, so all decompositions go through `scipy.linalg.eigh`. Failures of
the underlying LAPACK routines surface as `NoConvergenceError` rather than
as partially filled results.
"""
import numpy as np
import scipy.linalg as sla

from src.domain.entities.spectral import EigenDecomposition, PsdVerdict
from src.domain.exceptions import (
    NoConvergenceError,
    NotHermitianError,
    NotPositiveDefiniteError,
)
from src.domain.value_objects.matrix import (
    ComplexMatrix,
    RealVector,
    frozen,
    max_abs,
    require_square,
)
from src.domain.value_objects.tolerance import Tolerance


def hermitian_defect(m: ComplexMatrix) -> float:
    """Max-norm of m - m*."""
    return max_abs(m - m.conj().T)


def hermitian_part(m: ComplexMatrix) -> ComplexMatrix:
    """(m + m*) / 2."""
    return frozen((m + m.conj().T) / 2)


def _check_hermitian(m: ComplexMatrix, tol: Tolerance) -> None:
    require_square(m)
    defect = hermitian_defect(m)
    if defect > tol.sym_tol * max(1.0, max_abs(m)):
        raise NotHermitianError(defect)


def hermitian_eigen(m: ComplexMatrix, tol: Tolerance) -> EigenDecomposition:
    """
    Eigendecomposition of a Hermitian matrix.

    Args:
        m: A square matrix, Hermitian within `tol.sym_tol`.
        tol: Numerical slack.

    Returns:
        Ascending eigenvalues with a unitary matrix whose columns are the
        matching eigenvectors, so that m = V diag(w) V*.

    Raises:
        NotHermitianError: If `m` is not self-adjoint.
        NoConvergenceError: If LAPACK fails.
    """
    _check_hermitian(m, tol)
    try:
        w, v = sla.eigh(hermitian_part(m))
    except sla.LinAlgError as e:
        raise NoConvergenceError("hermitian_eigen") from e
    return EigenDecomposition(
        eigenvalues=np.asarray(w, dtype=np.float64),
        eigenvectors=frozen(v),
    )


def _spectral_function(
    p: ComplexMatrix, tol: Tolerance, power: float
) -> ComplexMatrix:
    eig = hermitian_eigen(p, tol)
    w, v = eig.eigenvalues, eig.eigenvectors
    if w[0] <= tol.psd_tol * max(1.0, abs(float(w[-1]))):
        raise NotPositiveDefiniteError(float(w[0]))
    r = (v * w**power) @ v.conj().T
    return hermitian_part(r)


def spd_sqrt(p: ComplexMatrix, tol: Tolerance) -> ComplexMatrix:
    """
    Principal square root of a Hermitian positive definite matrix.

    Raises:
        NotPositiveDefiniteError: Reports the offending smallest eigenvalue.
    """
    return _spectral_function(p, tol, 0.5)


def spd_inv_sqrt(p: ComplexMatrix, tol: Tolerance) -> ComplexMatrix:
    """Inverse principal square root, p^(-1/2)."""
    return _spectral_function(p, tol, -0.5)


def pseudo_inverse(m: ComplexMatrix, tol: Tolerance) -> ComplexMatrix:
    """
    Moore-Penrose pseudo-inverse.

    Singular values below ``tol.psd_tol * sigma_max`` count as zero, so rank
    decisions are scale invariant and never raise.
    """
    try:
        return frozen(sla.pinv(m, atol=0.0, rtol=tol.psd_tol))
    except sla.LinAlgError as e:
        raise NoConvergenceError("pseudo_inverse") from e


def operator_norm(m: ComplexMatrix) -> float:
    """Largest singular value."""
    try:
        return float(sla.norm(m, 2))
    except sla.LinAlgError as e:
        raise NoConvergenceError("operator_norm") from e


def is_psd(m: ComplexMatrix, tol: Tolerance) -> PsdVerdict:
    """
    Decides m >= 0 as min-eigenvalue >= -psd_tol * max(1, ||m||).

    On failure the violating eigenpair is returned as witness.

    Raises:
        NotHermitianError: If `m` is not self-adjoint.
    """
    eig = hermitian_eigen(m, tol)
    w = eig.eigenvalues
    scale = max(1.0, abs(float(w[0])), abs(float(w[-1])))
    lowest = float(w[0])
    if lowest >= -tol.psd_tol * scale:
        return PsdVerdict(holds=True, min_eigenvalue=lowest)
    return PsdVerdict(
        holds=False,
        min_eigenvalue=lowest,
        witness=frozen(eig.eigenvectors[:, 0]),
    )


def solve_right(e: ComplexMatrix, f: ComplexMatrix) -> ComplexMatrix:
    """
    Computes E F^-1 by the transposed solve F^t W^t = E^t.

    LU with partial pivoting; F is never inverted explicitly.
    """
    try:
        return frozen(sla.solve(f.T, e.T).T)
    except sla.LinAlgError as err:
        raise NoConvergenceError("solve_right") from err


def solve_left(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    """Computes A^-1 B by LU solve."""
    try:
        return frozen(sla.solve(a, b))
    except sla.LinAlgError as e:
        raise NoConvergenceError("solve_left") from e


def singular_values(m: ComplexMatrix) -> RealVector:
    """Singular values in descending order."""
    try:
        return np.asarray(sla.svdvals(m), dtype=np.float64)
    except sla.LinAlgError as e:
        raise NoConvergenceError("singular_values") from e
