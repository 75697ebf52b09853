"""
The Siegel upper and lower half spaces and the Möbius action on them.

Phi_S(Z) = (AZ + B)(CZ + D)^-1 is evaluated by a transposed linear solve and
then classified: singular denominator, asymmetric image, image in the upper
space, in the lower space, or symmetric with an indefinite imaginary part.
"""
from dataclasses import dataclass
from typing import Any

import numpy as np
import scipy.linalg as sla

from src.domain.entities.block_symplectic import BlockSymplectic
from src.domain.entities.siegel_point import (
    ActionOutcome,
    ActionStatus,
    CompositionCheck,
    LowerSiegelPoint,
    SiegelPoint,
)
from src.domain.exceptions import (
    ChainBreakError,
    DimensionMismatchError,
    ImaginaryPartNotNDError,
    ImaginaryPartNotPDError,
    NoConvergenceError,
    NotSymmetricError,
)
from src.domain.services.matrixcore import (
    operator_norm,
    solve_left,
    solve_right,
)
from src.domain.value_objects.matrix import (
    ComplexMatrix,
    RealVector,
    complex_matrix,
    frozen,
    max_abs,
    require_square,
)
from src.domain.value_objects.tolerance import Tolerance

AnyPoint = SiegelPoint | LowerSiegelPoint


@dataclass(frozen=True)
class _Parts:
    z: ComplexMatrix
    x: ComplexMatrix
    y: ComplexMatrix
    eigenvalues: RealVector


def _split(z: ComplexMatrix, tol: Tolerance) -> _Parts:
    require_square(z)
    asym = np.abs(z - z.T)
    defect = float(asym.max())
    if defect > tol.sym_tol * max(1.0, max_abs(z)):
        row, col = np.unravel_index(int(asym.argmax()), asym.shape)
        raise NotSymmetricError(defect, (int(row), int(col)))
    zs = (z + z.T) / 2
    y = zs.imag
    try:
        w = sla.eigvalsh((y + y.T) / 2)
    except sla.LinAlgError as e:
        raise NoConvergenceError("siegel_split") from e
    return _Parts(
        z=frozen(zs), x=frozen(zs.real), y=frozen(y), eigenvalues=w
    )


def _gate(parts: _Parts, tol: Tolerance) -> float:
    w = parts.eigenvalues
    return tol.psd_tol * max(1.0, abs(float(w[0])), abs(float(w[-1])))


def make_siegel(z: ComplexMatrix, tol: Tolerance) -> SiegelPoint:
    """
    Validates a point of the upper space.

    Raises:
        NotSymmetricError: With the largest |z - z^t| and its position.
        ImaginaryPartNotPDError: With the smallest eigenvalue of Y.
    """
    parts = _split(complex_matrix(z), tol)
    lowest = float(parts.eigenvalues[0])
    if lowest <= _gate(parts, tol):
        raise ImaginaryPartNotPDError(lowest)
    return SiegelPoint(z=parts.z, x=parts.x, y=parts.y, min_eig_y=lowest)


def make_lower_siegel(z: ComplexMatrix, tol: Tolerance) -> LowerSiegelPoint:
    """
    Validates a point of the lower space.

    Raises:
        NotSymmetricError: With the largest |z - z^t| and its position.
        ImaginaryPartNotNDError: With the largest eigenvalue of Y.
    """
    parts = _split(complex_matrix(z), tol)
    highest = float(parts.eigenvalues[-1])
    if highest >= -_gate(parts, tol):
        raise ImaginaryPartNotNDError(highest)
    return LowerSiegelPoint(
        z=parts.z, x=parts.x, y=parts.y, min_eig_neg_y=-highest
    )


def conjugate_point(z: AnyPoint) -> AnyPoint:
    """Entrywise conjugate; swaps the upper and lower spaces."""
    return z.conjugate()


def _singular(f: ComplexMatrix) -> tuple[float, float, ComplexMatrix]:
    try:
        _, sv, vh = sla.svd(f)
    except sla.LinAlgError as err:
        raise NoConvergenceError("mobius_apply") from err
    return float(sv[0]), float(sv[-1]), frozen(vh[-1].conj())


def act(s: BlockSymplectic, z: ComplexMatrix, tol: Tolerance) -> ActionOutcome:
    """
    Phi_S on an arbitrary n x n matrix, classified.

    Raises:
        DimensionMismatchError: If Z is not n x n for the 2n x 2n S.
    """
    if z.shape != (s.n, s.n):
        raise DimensionMismatchError(f"({s.n}, {s.n})", str(z.shape))
    e = frozen(s.a @ z + s.b)
    f = frozen(s.c @ z + s.d)
    sigma_max, sigma_min, null = _singular(f)
    if sigma_max == 0.0 or sigma_min <= tol.psd_tol * sigma_max:
        return ActionOutcome(
            status=ActionStatus.SINGULAR_DENOMINATOR,
            e_matrix=e,
            f_matrix=f,
            cond_f=float("inf"),
            null_vector=null,
        )
    cond = sigma_max / sigma_min
    w = solve_right(e, f)
    im_ef = frozen((w - w.conj().T) / 2j)
    defect = max_abs(w - w.T)
    base: dict[str, Any] = {
        "e_matrix": e,
        "f_matrix": f,
        "cond_f": cond,
        "symmetry_defect": defect,
        "im_ef": im_ef,
    }
    if defect > tol.eq_tol * cond * max(1.0, max_abs(w)):
        return ActionOutcome(status=ActionStatus.ASYMMETRIC, result=w, **base)

    parts = _split(frozen((w + w.T) / 2), tol)
    gate = _gate(parts, tol)
    lowest = float(parts.eigenvalues[0])
    highest = float(parts.eigenvalues[-1])
    if lowest > gate:
        upper = SiegelPoint(
            z=parts.z, x=parts.x, y=parts.y, min_eig_y=lowest
        )
        return ActionOutcome(status=ActionStatus.IN_UPPER, upper=upper, **base)
    if highest < -gate:
        lower = LowerSiegelPoint(
            z=parts.z, x=parts.x, y=parts.y, min_eig_neg_y=-highest
        )
        return ActionOutcome(status=ActionStatus.IN_LOWER, lower=lower, **base)
    return ActionOutcome(
        status=ActionStatus.SYMMETRIC_ONLY, result=parts.z, **base
    )


def mobius_apply(
    s: BlockSymplectic, z: AnyPoint, tol: Tolerance
) -> ActionOutcome:
    """
    Phi_S(Z) = (AZ + B)(CZ + D)^-1 with well-definedness diagnostics.

    A singular denominator is an outcome, not an exception.
    """
    return act(s, z.z, tol)


def imaginary_part_via_congruence(
    e: ComplexMatrix, f: ComplexMatrix
) -> ComplexMatrix:
    """(F^-1)* (F*E - E*F)/2i F^-1, equal to Im(E F^-1) when E^tF = F^tE."""
    f_inv = solve_left(f, frozen(np.eye(f.shape[0])))
    core = (f.conj().T @ e - e.conj().T @ f) / 2j
    return frozen(f_inv.conj().T @ core @ f_inv)


def _image(outcome: ActionOutcome, stage: int) -> ComplexMatrix:
    image = outcome.image
    if image is None:
        raise ChainBreakError(stage, outcome.status.value)
    return image


def compose_check(
    s: BlockSymplectic,
    r: BlockSymplectic,
    z: AnyPoint,
    tol: Tolerance,
) -> CompositionCheck:
    """
    Compares Phi_S(Phi_R(Z)) with Phi_SR(Z).

    Stages: 1 = Phi_R(Z), 2 = Phi_S of that, 3 = Phi_SR(Z).

    Raises:
        ChainBreakError: At the first stage with a singular denominator.
    """
    inner = _image(act(r, z.z, tol), 1)
    lhs = _image(act(s, inner, tol), 2)
    rhs = _image(act(s @ r, z.z, tol), 3)
    scale = operator_norm(s.s) * operator_norm(r.s) * operator_norm(z.z)
    return CompositionCheck(
        lhs=lhs,
        rhs=rhs,
        max_defect=max_abs(lhs - rhs),
        bound=tol.eq_tol * (1.0 + scale),
    )
