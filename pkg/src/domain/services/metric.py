"""
The Finsler metric on the Siegel upper half space.

F_Z(W) = ||Y^-1/2 W Y^-1/2|| is the line element; the induced distance has
the closed form d(Z1, Z2) = 2 ln ||S_Z1^-1 S_Z2|| through the transitivity
witnesses. Discretized path lengths give an upper bound used to cross-check
the closed form, and the checkers below evaluate the isometry, contraction
and compression statements on concrete inputs.
"""
from collections.abc import Sequence

import numpy as np
from numpy.typing import ArrayLike

from src.domain.entities.block_symplectic import BlockSymplectic
from src.domain.entities.metric import (
    CompressionCheck,
    ContractionReport,
    DistanceMethod,
    DistanceReport,
    IsometryCheck,
    PathSample,
    TangentVector,
)
from src.domain.entities.siegel_point import (
    ActionOutcome,
    LowerSiegelPoint,
    SiegelPoint,
)
from src.domain.exceptions import (
    ChainBreakError,
    DimensionMismatchError,
    ImaginaryPartNotPDError,
    NoConvergenceError,
    NotSymmetricError,
    WrongShapeError,
    ZeroVectorError,
)
from src.domain.services.matrixcore import (
    operator_norm,
    solve_left,
    spd_inv_sqrt,
    spd_sqrt,
)
from src.domain.services.siegel import make_siegel, mobius_apply
from src.domain.services.symplectic import (
    imaginary_factor,
    require_real_symplectic,
    symplectic_inverse,
    upper_witness,
)
from src.domain.value_objects.matrix import (
    complex_matrix,
    frozen,
    max_abs,
)
from src.domain.value_objects.tolerance import Tolerance

DEGENERATE_DISTANCE = 1e-6
COMPRESSION_SLACK = 1e-9


def _same_dimension(n1: int, n2: int) -> None:
    if n1 != n2:
        raise DimensionMismatchError(f"({n1}, {n1})", f"({n2}, {n2})")


def hyperbolic_distance(z: complex, w: complex) -> float:
    """
    Distance in the upper half plane for ds = |dz| / y.

    Evaluated as 2 asinh(|z - w| / (2 sqrt(Im z Im w))), which does not
    cancel for nearby points.

    Raises:
        ImaginaryPartNotPDError: If either point has Im <= 0.
    """
    lowest = min(z.imag, w.imag)
    if lowest <= 0.0:
        raise ImaginaryPartNotPDError(lowest)
    gap = abs(z - w) / (2.0 * np.sqrt(z.imag * w.imag))
    return float(2.0 * np.arcsinh(gap))


def make_tangent(
    at: SiegelPoint, w: ArrayLike, tol: Tolerance
) -> TangentVector:
    """
    Validates W as a tangent vector at `at`.

    Raises:
        DimensionMismatchError: If W is not n x n.
        NotSymmetricError: If W is not complex symmetric within sym_tol.
    """
    matrix = complex_matrix(w)
    if matrix.shape != at.z.shape:
        raise DimensionMismatchError(str(at.z.shape), str(matrix.shape))
    asym = np.abs(matrix - matrix.T)
    defect = float(asym.max())
    if defect > tol.sym_tol * max(1.0, max_abs(matrix)):
        row, col = np.unravel_index(int(asym.argmax()), asym.shape)
        raise NotSymmetricError(defect, (int(row), int(col)))
    return TangentVector(at=at, w=frozen((matrix + matrix.T) / 2))


def finsler_norm(t: TangentVector, tol: Tolerance) -> float:
    """F_Z(W) = ||Y^-1/2 W Y^-1/2||, the operator 2-norm."""
    root = spd_inv_sqrt(t.at.y, tol)
    return operator_norm(root @ t.w @ root)


def siegel_distance(
    z1: SiegelPoint, z2: SiegelPoint, tol: Tolerance
) -> DistanceReport:
    """
    d(Z1, Z2) = 2 ln ||S_Z1^-1 S_Z2||.

    The product is obtained by a linear solve. Its norm is at least 1 in
    exact arithmetic and is clamped to 1 from below before the logarithm.
    """
    _same_dimension(z1.n, z2.n)
    s1 = upper_witness(z1, tol)
    s2 = upper_witness(z2, tol)
    norm = max(operator_norm(solve_left(s1.s, s2.s)), 1.0)
    return DistanceReport(
        value=2.0 * float(np.log(norm)),
        method=DistanceMethod.CLOSED_FORM,
        s1_norm_arg=s1,
        s2_norm_arg=s2,
        operator_norm_used=norm,
    )


def lower_distance(
    z1: LowerSiegelPoint, z2: LowerSiegelPoint, tol: Tolerance
) -> DistanceReport:
    """d-(Z1, Z2) = d(conj Z1, conj Z2)."""
    return siegel_distance(z1.conjugate(), z2.conjugate(), tol)


def quotient_distance(
    s1: BlockSymplectic, s2: BlockSymplectic, tol: Tolerance
) -> float:
    """
    2 ln ||S1^-1 S2|| on cosets S K of the stabilizer of iI.

    Raises:
        NotRealSymplecticError: If either matrix is not real symplectic.
    """
    require_real_symplectic(s1, tol)
    require_real_symplectic(s2, tol)
    _same_dimension(s1.n, s2.n)
    norm = max(operator_norm(solve_left(s1.s, s2.s)), 1.0)
    return 2.0 * float(np.log(norm))


def straight_path(
    z1: SiegelPoint, z2: SiegelPoint, k: int, tol: Tolerance
) -> PathSample:
    """Nodes (1 - t) Z1 + t Z2 at t = j / k, j = 0..k."""
    if k < 1:
        raise ValueError(f"Path needs at least one step, got k={k}.")
    _same_dimension(z1.n, z2.n)
    points = tuple(
        make_siegel((1.0 - t) * z1.z + t * z2.z, tol)
        for t in np.linspace(0.0, 1.0, k + 1)
    )
    return PathSample(points=points)


def path_finsler_length(p: PathSample, tol: Tolerance) -> float:
    """
    Composite midpoint rule for the Finsler length of a sampled path.

    Each cell contributes F at the cell midpoint applied to the node
    difference. Midpoints of validated nodes stay in the space, which is
    convex, so the cells are evaluated together as one batch.

    Raises:
        ImaginaryPartNotPDError: If a midpoint has Im Z not above psd_tol.
        NoConvergenceError: If the batched eigensolver fails.
    """
    if p.k < 1:
        raise ValueError("Path needs at least two points.")
    nodes = np.stack([point.z for point in p.points])
    mids = (nodes[1:] + nodes[:-1]) / 2
    steps = nodes[1:] - nodes[:-1]
    im = mids.imag
    try:
        lam, vecs = np.linalg.eigh((im + np.swapaxes(im, 1, 2)) / 2)
    except np.linalg.LinAlgError as e:
        raise NoConvergenceError("batched eigh") from e
    lowest = float(lam[:, 0].min())
    if lowest <= tol.psd_tol:
        raise ImaginaryPartNotPDError(lowest)
    roots = (vecs / np.sqrt(lam)[:, None, :]) @ np.swapaxes(vecs, 1, 2)
    norms = np.linalg.norm(roots @ steps @ roots, ord=2, axis=(1, 2))
    return float(norms.sum())


def path_upper_bound(
    z1: SiegelPoint, z2: SiegelPoint, k: int, tol: Tolerance
) -> DistanceReport:
    """
    Finsler length of the straight segment from Z1 to Z2 over k cells.

    The length bounds d(Z1, Z2) from above up to quadrature error. The
    report carries the witnesses of the endpoints and
    operator_norm_used = exp(value / 2), the norm the closed form would
    need to return the same value.
    """
    length = path_finsler_length(straight_path(z1, z2, k, tol), tol)
    return DistanceReport(
        value=length,
        method=DistanceMethod.PATH_UPPER_BOUND,
        s1_norm_arg=upper_witness(z1, tol),
        s2_norm_arg=upper_witness(z2, tol),
        operator_norm_used=float(np.exp(length / 2.0)),
    )


def _lower_image(outcome: ActionOutcome, stage: int) -> LowerSiegelPoint:
    if outcome.lower is None:
        raise ChainBreakError(stage, outcome.status.value)
    return outcome.lower


def isometry_check(
    s: BlockSymplectic, z1: SiegelPoint, z2: SiegelPoint, tol: Tolerance
) -> IsometryCheck:
    """
    Compares d-(Phi_S Z1, Phi_S Z2) with d(Z1, Z2) for purely imaginary
    symplectic S.

    Raises:
        NotPurelyImaginarySymplecticError: If S is not of that class.
        ChainBreakError: If an image is not in the lower space.
    """
    imaginary_factor(s, tol)
    w1 = _lower_image(mobius_apply(s, z1, tol), 1)
    w2 = _lower_image(mobius_apply(s, z2, tol), 2)
    lhs = lower_distance(w1, w2, tol).value
    rhs = siegel_distance(z1, z2, tol).value
    return IsometryCheck(lhs=lhs, rhs=rhs, defect=abs(lhs - rhs))


def contraction_factor(
    w: SiegelPoint, shift: SiegelPoint, tol: Tolerance
) -> float:
    """||(Im W + Im Z)^-1/2 (Im W)^1/2||, strictly below 1."""
    _same_dimension(w.n, shift.n)
    outer = spd_inv_sqrt(frozen(w.y + shift.y), tol)
    return operator_norm(outer @ spd_sqrt(w.y, tol))


def _translation_shift(
    s: BlockSymplectic,
    conjugator: BlockSymplectic | None,
    tol: Tolerance,
) -> tuple[SiegelPoint, BlockSymplectic | None]:
    """
    Recovers Z from S = P T_Z P^-1, returning Z and P^-1 (None if P = I).
    """
    if conjugator is None:
        r, p_inv = s, None
    else:
        require_real_symplectic(conjugator, tol)
        _same_dimension(s.n, conjugator.n)
        r = BlockSymplectic(solve_left(conjugator.s, s.s @ conjugator.s))
        p_inv = symplectic_inverse(conjugator)
    eye = np.eye(s.n)
    scale = max(1.0, max_abs(s.s) ** 2)
    defect = max(
        max_abs(r.a - eye), max_abs(r.c), max_abs(r.d - eye)
    )
    if defect > tol.eq_tol * scale:
        raise WrongShapeError(
            f"not a translation [[I, Z], [O, I]] (defect {defect:.3e})"
        )
    try:
        shift = make_siegel(r.b, tol)
    except (NotSymmetricError, ImaginaryPartNotPDError) as e:
        raise WrongShapeError(f"translation parameter: {e}") from e
    return shift, p_inv


def _upper_image(
    s: BlockSymplectic, z: SiegelPoint, tol: Tolerance
) -> SiegelPoint:
    outcome = mobius_apply(s, z, tol)
    if outcome.upper is None:
        raise ChainBreakError(1, outcome.status.value)
    return outcome.upper


def contraction_check(
    s: BlockSymplectic,
    pairs: Sequence[tuple[SiegelPoint, SiegelPoint]],
    tol: Tolerance,
    conjugator: BlockSymplectic | None = None,
) -> ContractionReport:
    """
    Distance ratios d(Phi_S Z1, Phi_S Z2) / d(Z1, Z2) for a translation
    S = T_Z with Im Z > 0, or its conjugate P T_Z P^-1 by real symplectic P.

    Pairs closer than DEGENERATE_DISTANCE are excluded. For each remaining
    pair, the larger pointwise contraction factor of the two endpoints
    (taken in the coordinates where S is a plain translation) is reported.

    Args:
        s: The map, T_Z or P T_Z P^-1.
        pairs: Point pairs in the upper space.
        tol: Tolerances.
        conjugator: P, if S is a conjugated translation. Many pairs
            (P, Z) give the same S, so P is not recovered from S and must
            be supplied for the pointwise bounds. None means P = I.

    Raises:
        WrongShapeError: If S is not of the conjugated translation form.
        NotRealSymplecticError: If P is not real symplectic.
    """
    shift, p_inv = _translation_shift(s, conjugator, tol)
    ratios: list[float] = []
    bounds: list[float] = []
    excluded: list[int] = []
    for index, (z1, z2) in enumerate(pairs):
        before = siegel_distance(z1, z2, tol).value
        if before < DEGENERATE_DISTANCE:
            excluded.append(index)
            continue
        after = siegel_distance(
            _upper_image(s, z1, tol), _upper_image(s, z2, tol), tol
        ).value
        ratios.append(after / before)
        local = (
            (z1, z2)
            if p_inv is None
            else (_upper_image(p_inv, z1, tol), _upper_image(p_inv, z2, tol))
        )
        bounds.append(
            max(contraction_factor(w, shift, tol) for w in local)
        )
    return ContractionReport(
        max_ratio=max(ratios, default=0.0),
        ratios=tuple(ratios),
        excluded=tuple(excluded),
        pointwise_bounds=tuple(bounds),
    )


def compression_check(
    v: ArrayLike, z1: SiegelPoint, z2: SiegelPoint, tol: Tolerance
) -> CompressionCheck:
    """
    Compares the hyperbolic distance of v*Z1v and v*Z2v with d(Z1, Z2).

    Raises:
        ZeroVectorError: If v = 0.
        WrongShapeError: If ||v|| > 1.
        DimensionMismatchError: If v does not have n entries.
    """
    _same_dimension(z1.n, z2.n)
    vector = np.asarray(v, dtype=np.complex128).ravel()
    if vector.shape != (z1.n,):
        raise DimensionMismatchError(f"({z1.n},)", str(vector.shape))
    length = float(np.linalg.norm(vector))
    if length == 0.0:
        raise ZeroVectorError()
    if length > 1.0 + tol.eq_tol:
        raise WrongShapeError(f"vector norm {length:.6g} exceeds 1")
    a = complex(np.vdot(vector, z1.z @ vector))
    b = complex(np.vdot(vector, z2.z @ vector))
    lhs = hyperbolic_distance(a, b)
    rhs = siegel_distance(z1, z2, tol).value
    return CompressionCheck(
        lhs=lhs, rhs=rhs, holds=lhs <= rhs + COMPRESSION_SLACK
    )
