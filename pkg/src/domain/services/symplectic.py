"""
The 2n x 2n block world.

Predicates for SP(2n, C) and its antisymplectic coset, the classifier
matrix M = i(S*JS - J) with the verdict it supports, the pseudo-inverse
criterion for positivity of a self-adjoint block matrix, and the named
constructions: the transitivity witnesses, the reflection I-, translations
and the stabilizer K of iI.
"""
from functools import lru_cache

import numpy as np

from src.domain.entities.block_symplectic import (
    BlockSymplectic,
    SelfAdjointBlocks,
    StandardJ,
)
from src.domain.entities.classification import (
    ActionClassification,
    BlockCondition,
    BlockConditions,
    BlockPsdVerdict,
    BlockwiseDefects,
    ClassificationNotes,
    Verdict,
)
from src.domain.entities.siegel_point import LowerSiegelPoint, SiegelPoint
from src.domain.exceptions import (
    NotHermitianError,
    NotPurelyImaginarySymplecticError,
    NotRealSymplecticError,
    StabilizerCharacterizationError,
)
from src.domain.services.matrixcore import (
    hermitian_defect,
    hermitian_eigen,
    hermitian_part,
    is_psd,
    pseudo_inverse,
    spd_inv_sqrt,
    spd_sqrt,
)
from src.domain.services.siegel import act
from src.domain.value_objects.matrix import ComplexMatrix, frozen, max_abs
from src.domain.value_objects.tolerance import Tolerance

DEFAULT_TOLERANCE = Tolerance()


@lru_cache(maxsize=16)
def standard_j(n: int) -> StandardJ:
    """J = [[O, I_n], [-I_n, O]] with exact integer entries."""
    if n < 1:
        raise ValueError(f"Block dimension must be >= 1, got {n}.")
    eye = np.eye(n)
    zero = np.zeros((n, n))
    value = frozen(np.block([[zero, eye], [-eye, zero]]))
    return StandardJ(n=n, value=value)


@lru_cache(maxsize=16)
def i_minus(n: int) -> BlockSymplectic:
    """I- = [[-I_n, O], [O, I_n]], real antisymplectic and unitary."""
    return BlockSymplectic(frozen(np.diag([-1.0] * n + [1.0] * n)))


def identity(n: int) -> BlockSymplectic:
    return BlockSymplectic(frozen(np.eye(2 * n)))


def _form(s: BlockSymplectic) -> ComplexMatrix:
    j = standard_j(s.n).value
    return frozen(s.s.T @ j @ s.s)


def symplectic_defect(s: BlockSymplectic) -> float:
    """||S^t J S - J||_max."""
    return max_abs(_form(s) - standard_j(s.n).value)


def antisymplectic_defect(s: BlockSymplectic) -> float:
    """||S^t J S + J||_max."""
    return max_abs(_form(s) + standard_j(s.n).value)


def _form_gate(s: BlockSymplectic, tol: Tolerance) -> float:
    return tol.eq_tol * max(1.0, max_abs(s.s) ** 2)


def is_symplectic(s: BlockSymplectic, tol: Tolerance) -> bool:
    """S^tJS = J up to eq_tol * max(1, ||S||_max^2)."""
    return symplectic_defect(s) <= _form_gate(s, tol)


def blockwise_defects(s: BlockSymplectic) -> BlockwiseDefects:
    """
    Violations of: A^tC symmetric, B^tD symmetric, A^tD - C^tB = I.
    """
    a, b, c, d = s.a, s.b, s.c, s.d
    atc = a.T @ c
    btd = b.T @ d
    cross = a.T @ d - c.T @ b - np.eye(s.n)
    return BlockwiseDefects(
        atc_symmetry=max_abs(atc - atc.T),
        btd_symmetry=max_abs(btd - btd.T),
        cross_identity=max_abs(cross),
    )


def is_symplectic_blockwise(s: BlockSymplectic, tol: Tolerance) -> bool:
    return blockwise_defects(s).largest() <= _form_gate(s, tol)


def is_antisymplectic(s: BlockSymplectic, tol: Tolerance) -> bool:
    return antisymplectic_defect(s) <= _form_gate(s, tol)


def classifier_matrix(
    s: BlockSymplectic, tol: Tolerance = DEFAULT_TOLERANCE
) -> ComplexMatrix:
    """
    M = i(S*JS - J), self-adjoint for every S.

    Raises:
        NotHermitianError: If rounding broke self-adjointness beyond
            sym_tol (relative to the entries of M).
    """
    j = standard_j(s.n).value
    m = 1j * (s.s.conj().T @ j @ s.s - j)
    defect = hermitian_defect(m)
    if defect > tol.sym_tol * max(1.0, max_abs(m)):
        raise NotHermitianError(defect)
    return hermitian_part(m)


def classification_notes(
    s: BlockSymplectic, tol: Tolerance
) -> ClassificationNotes:
    return ClassificationNotes(
        is_real=s.is_real(tol),
        is_purely_imaginary=s.is_purely_imaginary(tol),
        is_symplectic=is_symplectic(s, tol),
        is_antisymplectic=is_antisymplectic(s, tol),
    )


def classify_action(
    s: BlockSymplectic, tol: Tolerance
) -> ActionClassification:
    """
    Reports what the known sufficient conditions say about Phi_S.

    PreservesSiegel only for symplectic S with M >= 0; MapsToLower only for
    real antisymplectic or purely imaginary symplectic S. Anything else is
    Undetermined.
    """
    notes = classification_notes(s, tol)
    m = classifier_matrix(s, tol)
    psd = is_psd(m, tol)
    if notes.is_symplectic and psd.holds:
        verdict = Verdict.PRESERVES_SIEGEL
    elif (notes.is_antisymplectic and notes.is_real) or (
        notes.is_symplectic and notes.is_purely_imaginary
    ):
        verdict = Verdict.MAPS_TO_LOWER
    else:
        verdict = Verdict.UNDETERMINED
    return ActionClassification(
        verdict=verdict,
        m_matrix=m,
        min_eigenvalue=psd.min_eigenvalue,
        notes=notes,
    )


def _schur_form(
    pivot: ComplexMatrix,
    off: ComplexMatrix,
    other: ComplexMatrix,
    scale: float,
    tol: Tolerance,
) -> bool:
    """
    pivot >= 0, (I - pivot pivot^+) off = O and
    other - off* pivot^+ off >= 0.
    """
    if not is_psd(pivot, tol).holds:
        return False
    pinv = pseudo_inverse(pivot, tol)
    n = pivot.shape[0]
    residual = (np.eye(n) - pivot @ pinv) @ off
    if max_abs(residual) > tol.eq_tol * scale:
        return False
    schur = hermitian_part(other - off.conj().T @ pinv @ off)
    return is_psd(schur, tol).holds


def block_psd_criterion(
    m: SelfAdjointBlocks, tol: Tolerance
) -> BlockPsdVerdict:
    """
    Decides M >= 0 through pseudo-inverses instead of the spectrum of M.

    Both forms are evaluated: alpha >= 0 with the range condition and the
    Schur complement in alpha, and the same in gamma. They agree in exact
    arithmetic. The verdict is taken from the form whose pivot block has
    the larger smallest eigenvalue; ties go to alpha.

    Raises:
        NotHermitianError: If alpha or gamma is not self-adjoint.
    """
    for block in (m.alpha, m.gamma):
        defect = hermitian_defect(block)
        if defect > tol.sym_tol * max(1.0, max_abs(block)):
            raise NotHermitianError(defect)
    scale = max(1.0, max_abs(m.assemble()))
    alpha_form = _schur_form(m.alpha, m.beta, m.gamma, scale, tol)
    gamma_form = _schur_form(
        m.gamma, frozen(m.beta.conj().T), m.alpha, scale, tol
    )
    alpha_low = hermitian_eigen(m.alpha, tol).eigenvalues[0]
    gamma_low = hermitian_eigen(m.gamma, tol).eigenvalues[0]
    if gamma_low > alpha_low:
        via, holds = BlockCondition.GAMMA_SCHUR, gamma_form
    else:
        via, holds = BlockCondition.ALPHA_SCHUR, alpha_form
    return BlockPsdVerdict(
        holds=holds,
        via=via,
        alpha_form=alpha_form,
        gamma_form=gamma_form,
    )


def classifier_block_conditions(
    s: BlockSymplectic, tol: Tolerance
) -> BlockConditions:
    """
    The three printed necessary conditions on A, B, C, D, taken literally:

    (1) i(A*C - C*A) >= 0
    (2) [I + (A*C - C*A)(A*C - C*A)^+](A*D - C*B - I) = O
    (3) i(B*D - D*B) + i(B*C - D*A + I)(A*C - C*A)^+(A*D - C*B - I) >= 0

    No equivalence with M >= 0 is claimed.
    """
    a, b, c, d = s.a, s.b, s.c, s.d
    eye = np.eye(s.n)
    p = a.conj().T @ c - c.conj().T @ a
    q = a.conj().T @ d - c.conj().T @ b - eye
    r = b.conj().T @ c - d.conj().T @ a + eye
    g = b.conj().T @ d - d.conj().T @ b
    p_pinv = pseudo_inverse(frozen(p), tol)
    scale = max(1.0, max_abs(s.s) ** 2)

    first = is_psd(hermitian_part(1j * p), tol).holds
    second = max_abs((eye + p @ p_pinv) @ q) <= tol.eq_tol * scale
    third = is_psd(hermitian_part(1j * g + 1j * r @ p_pinv @ q), tol).holds
    return BlockConditions(first=first, second=second, third=third)


def upper_witness(
    z: SiegelPoint, tol: Tolerance = DEFAULT_TOLERANCE
) -> BlockSymplectic:
    """
    S_Z = [[sqrt(Y), X sqrt(Y)^-1], [O, sqrt(Y)^-1]].

    Real symplectic and sends iI to Z.
    """
    root = spd_sqrt(z.y, tol).real
    inv_root = spd_inv_sqrt(z.y, tol).real
    zero = np.zeros_like(root)
    return BlockSymplectic(
        frozen(np.block([[root, z.x.real @ inv_root], [zero, inv_root]]))
    )


def lower_witness(
    z: LowerSiegelPoint, tol: Tolerance = DEFAULT_TOLERANCE
) -> BlockSymplectic:
    """
    S_Z- = [[-sqrt(-Y), X sqrt(-Y)^-1], [O, sqrt(-Y)^-1]].

    Real antisymplectic and sends iI to Z in the lower space.
    """
    neg_y = frozen(-z.y)
    root = spd_sqrt(neg_y, tol).real
    inv_root = spd_inv_sqrt(neg_y, tol).real
    zero = np.zeros_like(root)
    return BlockSymplectic(
        frozen(np.block([[-root, z.x.real @ inv_root], [zero, inv_root]]))
    )


def reflected_witness(
    z: SiegelPoint, tol: Tolerance = DEFAULT_TOLERANCE
) -> BlockSymplectic:
    """S_Z I- : real antisymplectic, sends iI to the conjugate of Z."""
    return upper_witness(z, tol) @ i_minus(z.n)


def translation(z: SiegelPoint) -> BlockSymplectic:
    """T_Z = [[I, Z], [O, I]], acting as W -> W + Z."""
    eye = np.eye(z.n)
    return BlockSymplectic.from_blocks(eye, z.z, np.zeros_like(eye), eye)


def symplectic_inverse(s: BlockSymplectic) -> BlockSymplectic:
    """-J S^t J: the inverse of a symplectic S, minus it for antisymplectic."""
    j = standard_j(s.n).value
    return BlockSymplectic(frozen(-j @ s.s.T @ j))


def imaginary_factor(s: BlockSymplectic, tol: Tolerance) -> BlockSymplectic:
    """
    The real Q with S = iQ, for purely imaginary symplectic S.

    Raises:
        NotPurelyImaginarySymplecticError: If S is not of that class.
    """
    if not s.is_purely_imaginary(tol):
        raise NotPurelyImaginarySymplecticError("real part is non-zero")
    if not is_symplectic(s, tol):
        raise NotPurelyImaginarySymplecticError(
            f"S^tJS - J has defect {symplectic_defect(s):.3e}"
        )
    return BlockSymplectic(frozen(s.s.imag))


def canonical_sign(
    s: BlockSymplectic, tol: Tolerance = DEFAULT_TOLERANCE
) -> BlockSymplectic:
    """
    Representative of {S, -S}: the first non-zero entry in reading order
    gets a positive real part (positive imaginary part if it is purely
    imaginary).
    """
    floor = tol.sym_tol * max(1.0, max_abs(s.s))
    for entry in s.s.ravel():
        if abs(entry) <= floor:
            continue
        key = entry.real if abs(entry.real) > floor else entry.imag
        return s.scaled(-1.0) if key < 0 else s
    return s


def require_real_symplectic(u: BlockSymplectic, tol: Tolerance) -> None:
    """
    Raises:
        NotRealSymplecticError: If U has imaginary entries or fails
            S^tJS = J.
    """
    if not u.is_real(tol):
        raise NotRealSymplecticError("entries have imaginary parts")
    if not is_symplectic(u, tol):
        raise NotRealSymplecticError(
            f"S^tJS - J has defect {symplectic_defect(u):.3e}"
        )


def is_in_stabilizer_k(u: BlockSymplectic, tol: Tolerance) -> bool:
    """
    Decides Phi_U(iI) = iI for real symplectic U.

    A fixed point must also be orthogonal with blocks [[A, B], [-B, A]];
    if it is not, the characterization of K failed numerically.

    Raises:
        NotRealSymplecticError: If U is not real symplectic.
        StabilizerCharacterizationError: If a fixed point is not of the
            orthogonal block form.
    """
    require_real_symplectic(u, tol)
    n = u.n
    base = 1j * np.eye(n)
    outcome = act(u, frozen(base), tol)
    if not outcome.is_defined:
        return False
    image = outcome.image
    scale = max(1.0, max_abs(u.s) ** 2)
    if image is None or max_abs(image - base) > tol.eq_tol * scale:
        return False

    real = u.s.real
    orthogonality = max_abs(real.T @ real - np.eye(2 * n))
    shape = max(max_abs(u.a - u.d), max_abs(u.b + u.c))
    defect = max(orthogonality, shape)
    if defect > tol.eq_tol * scale:
        raise StabilizerCharacterizationError(defect)
    return True
