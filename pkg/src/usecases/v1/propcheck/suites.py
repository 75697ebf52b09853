"""
The registered property suites.

Each suite checks one statement about the Möbius action or the metric on
freshly sampled inputs. Thresholds are absolute unless a scale is named.
"""
import numpy as np

from src.domain.entities.block_symplectic import BlockSymplectic
from src.domain.entities.classification import Verdict
from src.domain.entities.siegel_point import ActionStatus, SiegelPoint
from src.domain.services.matrixcore import is_psd, operator_norm
from src.domain.services.metric import (
    compression_check,
    contraction_check,
    isometry_check,
    path_upper_bound,
    quotient_distance,
    siegel_distance,
)
from src.domain.services.sampling import (
    random_classifiable_complex_symplectic,
    random_complex_symplectic,
    random_lower_siegel_point,
    random_pure_imaginary_symplectic,
    random_real_antisymplectic,
    random_real_symplectic,
    random_self_adjoint_blocks,
    random_siegel_point,
    random_stabilizer_element,
    random_unit_vector,
)
from src.domain.services.siegel import compose_check, make_siegel, mobius_apply
from src.domain.services.symplectic import (
    antisymplectic_defect,
    block_psd_criterion,
    classifier_block_conditions,
    classifier_matrix,
    classify_action,
    imaginary_factor,
    is_antisymplectic,
    is_in_stabilizer_k,
    is_symplectic,
    is_symplectic_blockwise,
    lower_witness,
    reflected_witness,
    standard_j,
    symplectic_defect,
    symplectic_inverse,
    translation,
    upper_witness,
)
from src.domain.value_objects.matrix import ComplexMatrix, max_abs
from src.domain.value_objects.tolerance import Tolerance
from src.usecases.v1.propcheck.registry import (
    SuiteRegistry,
    TrialContext,
    TrialOutcome,
)

REGISTRY = SuiteRegistry()

ALL_DIMS = (1, 2, 3, 4)
SMALL_DIMS = (1, 2, 3)

COMPOSITION_MARGIN = 10.0
SYMMETRY_SLACK = 1e-8
WITNESS_SLACK = 1e-9
ISOMETRY_SLACK = 1e-6
ORACLE_SLACK = 1e-9
SCALED_SLACK = 1e-10
AXIOM_SLACK = 1e-9
TRIANGLE_SLACK = 1e-8
INVARIANCE_SLACK = 1e-7
COSET_SLACK = 1e-8
PATH_SLACK = 1e-3
REFINEMENT_RATIO = 0.6
CLASSIFIER_SLACK = 1e-12
DETERMINANT_SLACK = 1e-6
CONTRACTION_FIXTURE_SLACK = 1e-9
SCALED_HEIGHTS = (0.1, 0.5, 2.0, 10.0)


def _group(s: BlockSymplectic, ctx: TrialContext) -> str:
    if is_symplectic(s, ctx.tol):
        return "symplectic"
    if is_antisymplectic(s, ctx.tol):
        return "antisymplectic"
    return "neither"


def _scaled_identity(n: int, value: complex, tol: Tolerance) -> SiegelPoint:
    return make_siegel(value * np.eye(n), tol)


def _image_gap(
    s: BlockSymplectic,
    z: SiegelPoint,
    target: ComplexMatrix,
    ctx: TrialContext,
) -> float:
    image = mobius_apply(s, z, ctx.tol).image
    if image is None:
        return float("inf")
    return max_abs(image - target) / max(1.0, max_abs(target))


@REGISTRY.register(
    "check",
    "group predicates agree with how each sample was built",
    ALL_DIMS,
)
def check_trial(ctx: TrialContext) -> TrialOutcome:
    n, rng, tol = ctx.n, ctx.rng, ctx.tol
    kind = ctx.index % 6
    if kind == 5:
        u = ctx.block("u", random_stabilizer_element(n, rng))
        v = ctx.block("v", random_stabilizer_element(n, rng))
        members = (
            u,
            symplectic_inverse(u),
            u @ symplectic_inverse(v),
            standard_j(n).as_block(),
        )
        inside = [is_in_stabilizer_k(k, tol) for k in members]
        return TrialOutcome(
            passed=all(inside),
            defect=symplectic_defect(u),
            observed=f"stabilizer membership {inside}",
            expected="U, U^-1, UV^-1 and J fix iI",
            tallies=("stabilizer",),
        )

    if kind == 0:
        s, expected = random_real_symplectic(n, rng), "symplectic"
    elif kind == 1:
        s = random_real_antisymplectic(n, rng) @ random_real_antisymplectic(
            n, rng
        )
        expected = "symplectic"
    elif kind == 2:
        s = random_real_symplectic(n, rng) @ random_real_antisymplectic(
            n, rng
        )
        expected = "antisymplectic"
    elif kind == 3:
        s = upper_witness(random_siegel_point(n, rng, tol), tol)
        expected = "symplectic"
    else:
        s = lower_witness(random_lower_siegel_point(n, rng, tol), tol)
        expected = "antisymplectic"
    ctx.block("s", s)

    observed = _group(s, ctx)
    blockwise_agrees = is_symplectic(s, tol) == is_symplectic_blockwise(
        s, tol
    )
    scale = max(1.0, operator_norm(s.s) ** 2)
    m_size = max_abs(classifier_matrix(s, tol))
    m_ok = expected != "symplectic" or m_size <= CLASSIFIER_SLACK * scale
    det_gap = abs(abs(complex(np.linalg.det(s.s))) - 1.0)
    defect = (
        symplectic_defect(s)
        if expected == "symplectic"
        else antisymplectic_defect(s)
    )
    passed = (
        observed == expected
        and blockwise_agrees
        and s.is_real(tol)
        and m_ok
        and det_gap <= DETERMINANT_SLACK
    )
    return TrialOutcome(
        passed=passed,
        defect=defect,
        observed=(
            f"{observed}, blockwise agrees={blockwise_agrees}, "
            f"||M||={m_size:.3e}, ||det|-1|={det_gap:.3e}"
        ),
        expected=f"{expected}, real, |det| = 1, M = O if symplectic",
        tallies=(expected,),
    )


@REGISTRY.register(
    "classify-soundness",
    "S with i(S*JS - J) >= 0 maps every sampled Z into the upper space",
    ALL_DIMS,
)
def classify_soundness_trial(ctx: TrialContext) -> TrialOutcome:
    n, rng, tol = ctx.n, ctx.rng, ctx.tol
    s = ctx.block("s", random_classifiable_complex_symplectic(n, rng))
    classification = classify_action(s, tol)
    if classification.verdict is not Verdict.PRESERVES_SIEGEL:
        return TrialOutcome(
            passed=False,
            defect=max(0.0, -classification.min_eigenvalue),
            observed=f"verdict {classification.verdict}",
            expected=f"verdict {Verdict.PRESERVES_SIEGEL}",
        )
    for k in range(ctx.samples_per_map):
        z = random_siegel_point(n, rng, tol)
        outcome = mobius_apply(s, z, tol)
        if outcome.status is not ActionStatus.IN_UPPER:
            ctx.point(f"z{k}", z)
            return TrialOutcome(
                passed=False,
                defect=None,
                observed=f"{outcome.status} for sample {k}",
                expected=ActionStatus.IN_UPPER.value,
            )
    return TrialOutcome(
        passed=True,
        defect=max(0.0, -classification.min_eigenvalue),
        observed=ActionStatus.IN_UPPER.value,
        expected=ActionStatus.IN_UPPER.value,
    )


@REGISTRY.register(
    "composition",
    "Phi_S(Phi_R(Z)) = Phi_SR(Z) for real symplectic S, R",
    ALL_DIMS,
)
def composition_trial(ctx: TrialContext) -> TrialOutcome:
    n, rng, tol = ctx.n, ctx.rng, ctx.tol
    s = ctx.block("s", random_real_symplectic(n, rng))
    r = ctx.block("r", random_real_symplectic(n, rng))
    z = ctx.point("z", random_siegel_point(n, rng, tol))
    check = compose_check(s, r, z, tol)
    allowed = COMPOSITION_MARGIN * check.bound
    return TrialOutcome(
        passed=check.max_defect <= allowed,
        defect=check.max_defect / allowed,
        observed=f"max defect {check.max_defect:.3e}",
        expected=f"<= {allowed:.3e} ({COMPOSITION_MARGIN:g} x bound)",
    )


@REGISTRY.register(
    "real-action",
    "real symplectic S keeps Z in the upper space; S_Z sends iI to Z",
    ALL_DIMS,
)
def real_action_trial(ctx: TrialContext) -> TrialOutcome:
    n, rng, tol = ctx.n, ctx.rng, ctx.tol
    s = ctx.block("s", random_real_symplectic(n, rng))
    z = ctx.point("z", random_siegel_point(n, rng, tol))
    outcome = mobius_apply(s, z, tol)
    symmetric = outcome.symmetry_defect <= SYMMETRY_SLACK * outcome.cond_f
    witness_gap = _image_gap(
        upper_witness(z, tol), _scaled_identity(n, 1j, tol), z.z, ctx
    )
    return TrialOutcome(
        passed=(
            outcome.status is ActionStatus.IN_UPPER
            and symmetric
            and witness_gap <= WITNESS_SLACK
        ),
        defect=outcome.symmetry_defect,
        observed=(
            f"{outcome.status}, symmetry defect "
            f"{outcome.symmetry_defect:.3e}, witness gap {witness_gap:.3e}"
        ),
        expected=f"{ActionStatus.IN_UPPER}, S_Z(iI) = Z",
    )


@REGISTRY.register(
    "antisymplectic-action",
    "real antisymplectic and purely imaginary symplectic S map into "
    "the lower space",
    ALL_DIMS,
)
def antisymplectic_action_trial(ctx: TrialContext) -> TrialOutcome:
    n, rng, tol = ctx.n, ctx.rng, ctx.tol
    imaginary = ctx.index % 2 == 1
    if imaginary:
        s = ctx.block("s", random_pure_imaginary_symplectic(n, rng))
    else:
        s = ctx.block("s", random_real_antisymplectic(n, rng))
    z = ctx.point("z", random_siegel_point(n, rng, tol))
    outcome = mobius_apply(s, z, tol)
    base = _scaled_identity(n, 1j, tol)
    target = np.conj(z.z)
    gaps = [
        _image_gap(reflected_witness(z, tol), base, target, ctx),
        _image_gap(lower_witness(z.conjugate(), tol), base, target, ctx),
    ]
    if imaginary and outcome.image is not None:
        gaps.append(
            _image_gap(imaginary_factor(s, tol), z, outcome.image, ctx)
        )
    gap = max(gaps)
    return TrialOutcome(
        passed=outcome.status is ActionStatus.IN_LOWER
        and gap <= WITNESS_SLACK,
        defect=gap,
        observed=f"{outcome.status}, witness gap {gap:.3e}",
        expected=f"{ActionStatus.IN_LOWER}, witnesses reach conj(Z)",
        tallies=("pure-imaginary" if imaginary else "real-antisymplectic",),
    )


@REGISTRY.register(
    "pure-imaginary-isometry",
    "purely imaginary symplectic S is an isometry onto the lower space",
    SMALL_DIMS,
)
def pure_imaginary_isometry_trial(ctx: TrialContext) -> TrialOutcome:
    n, rng, tol = ctx.n, ctx.rng, ctx.tol
    s = ctx.block("s", random_pure_imaginary_symplectic(n, rng))
    z1 = ctx.point("z1", random_siegel_point(n, rng, tol))
    z2 = ctx.point("z2", random_siegel_point(n, rng, tol))
    check = isometry_check(s, z1, z2, tol)
    return TrialOutcome(
        passed=check.defect <= ISOMETRY_SLACK,
        defect=check.defect,
        observed=f"d-(image) = {check.lhs!r}, d = {check.rhs!r}",
        expected=f"|difference| <= {ISOMETRY_SLACK:g}",
    )


@REGISTRY.register(
    "hyperbolic-oracle",
    "for n = 1 the closed form is the hyperbolic distance",
    (1,),
)
def hyperbolic_oracle_trial(ctx: TrialContext) -> TrialOutcome:
    rng, tol = ctx.rng, ctx.tol
    z = ctx.point("z", random_siegel_point(1, rng, tol))
    w = ctx.point("w", random_siegel_point(1, rng, tol))
    a, b = complex(z.z[0, 0]), complex(w.z[0, 0])
    oracle = float(
        np.arccosh(1.0 + abs(a - b) ** 2 / (2.0 * a.imag * b.imag))
    )
    closed = siegel_distance(z, w, tol).value
    oracle_gap = abs(closed - oracle)

    height = SCALED_HEIGHTS[ctx.index % len(SCALED_HEIGHTS)]
    m = 1 + ctx.index % 3
    scaled = siegel_distance(
        _scaled_identity(m, 1j, tol),
        _scaled_identity(m, 1j * height, tol),
        tol,
    ).value
    scaled_gap = abs(scaled - abs(float(np.log(height))))
    return TrialOutcome(
        passed=oracle_gap <= ORACLE_SLACK and scaled_gap <= SCALED_SLACK,
        defect=oracle_gap,
        observed=f"closed {closed!r}, oracle {oracle!r}",
        expected=(
            f"agreement within {ORACLE_SLACK:g}; "
            f"d(iI, {height:g}iI) = |ln {height:g}| at n={m}"
        ),
    )


@REGISTRY.register(
    "metric-axioms",
    "metric axioms, real symplectic invariance and the coset isometry",
    ALL_DIMS,
)
def metric_axioms_trial(ctx: TrialContext) -> TrialOutcome:
    n, rng, tol = ctx.n, ctx.rng, ctx.tol
    z1 = ctx.point("z1", random_siegel_point(n, rng, tol))
    z2 = ctx.point("z2", random_siegel_point(n, rng, tol))
    z3 = ctx.point("z3", random_siegel_point(n, rng, tol))

    def d(a: SiegelPoint, b: SiegelPoint) -> float:
        return siegel_distance(a, b, tol).value

    d12, d21, d23, d13 = d(z1, z2), d(z2, z1), d(z2, z3), d(z1, z3)
    symmetry = abs(d12 - d21)
    identity = d(z1, z1)
    triangle = max(0.0, d13 - d12 - d23)

    s = ctx.block("s", random_real_symplectic(n, rng))
    u1 = mobius_apply(s, z1, tol).upper
    u2 = mobius_apply(s, z2, tol).upper
    invariance = (
        float("inf") if u1 is None or u2 is None else abs(d(u1, u2) - d12)
    )

    p1 = ctx.block("p1", random_real_symplectic(n, rng))
    p2 = ctx.block("p2", random_real_symplectic(n, rng))
    k1 = random_stabilizer_element(n, rng)
    k2 = random_stabilizer_element(n, rng)
    base = _scaled_identity(n, 1j, tol)
    q = quotient_distance(p1, p2, tol)
    w1 = mobius_apply(p1, base, tol).upper
    w2 = mobius_apply(p2, base, tol).upper
    psi = float("inf") if w1 is None or w2 is None else abs(q - d(w1, w2))
    coset = abs(quotient_distance(p1 @ k1, p2 @ k2, tol) - q)

    checks = {
        "symmetry": (symmetry, AXIOM_SLACK),
        "identity": (identity, AXIOM_SLACK),
        "triangle": (triangle, TRIANGLE_SLACK),
        "invariance": (invariance, INVARIANCE_SLACK),
        "coset-isometry": (psi, INVARIANCE_SLACK),
        "coset-independence": (coset, COSET_SLACK),
    }
    broken = [name for name, (value, bound) in checks.items() if value > bound]
    return TrialOutcome(
        passed=not broken,
        defect=max(value for value, _ in checks.values()),
        observed=(
            "violated: " + ", ".join(broken) if broken else "all hold"
        ),
        expected="symmetry, identity, triangle, invariance, coset isometry",
        tallies=tuple(f"violated:{name}" for name in broken),
    )


def _fixture_gap(n: int, steps: int, tol: Tolerance) -> float:
    bound = path_upper_bound(
        _scaled_identity(n, 1j, tol), _scaled_identity(n, 2j, tol), steps, tol
    )
    return abs(bound.value - float(np.log(2.0)))


@REGISTRY.register(
    "path-bound",
    "discretized straight paths never undercut the closed form",
    SMALL_DIMS,
)
def path_bound_trial(ctx: TrialContext) -> TrialOutcome:
    n, rng, tol = ctx.n, ctx.rng, ctx.tol
    z1 = ctx.point("z1", random_siegel_point(n, rng, tol))
    z2 = ctx.point("z2", random_siegel_point(n, rng, tol))
    steps = ctx.path_steps
    length = path_upper_bound(z1, z2, steps, tol).value
    distance = siegel_distance(z1, z2, tol).value
    passed = length >= distance - PATH_SLACK
    observed = f"length {length!r}, distance {distance!r}"
    if ctx.index == 0 and steps >= 2:
        fine = _fixture_gap(n, steps, tol)
        coarse = _fixture_gap(n, steps // 2, tol)
        passed = (
            passed
            and fine <= PATH_SLACK
            and fine <= REFINEMENT_RATIO * coarse
        )
        observed += f"; ln 2 gaps {coarse:.3e} -> {fine:.3e}"
    return TrialOutcome(
        passed=passed,
        defect=max(0.0, distance - length),
        observed=observed,
        expected=f"length >= distance - {PATH_SLACK:g}",
    )


@REGISTRY.register(
    "contraction",
    "translations by Z with Im Z > 0 shrink every distance",
    SMALL_DIMS,
)
def contraction_trial(ctx: TrialContext) -> TrialOutcome:
    n, rng, tol = ctx.n, ctx.rng, ctx.tol
    shift = ctx.point("shift", random_siegel_point(n, rng, tol))
    t = translation(shift)
    conjugator = None
    if ctx.index % 2 == 1:
        conjugator = ctx.block("p", random_real_symplectic(n, rng))
        t = conjugator @ t @ symplectic_inverse(conjugator)
    pairs: list[tuple[SiegelPoint, SiegelPoint]] = []
    for k in range(ctx.samples_per_map):
        pairs.append(
            (
                ctx.point(f"z1_{k}", random_siegel_point(n, rng, tol)),
                ctx.point(f"z2_{k}", random_siegel_point(n, rng, tol)),
            )
        )
    report = contraction_check(t, pairs, tol, conjugator)
    bound = max(report.pointwise_bounds, default=0.0)
    passed = report.max_ratio < 1.0 and bound < 1.0
    observed = f"max ratio {report.max_ratio!r}, max factor {bound!r}"
    if ctx.index == 0:
        fixture = contraction_check(
            translation(_scaled_identity(n, 1j, tol)),
            [(_scaled_identity(n, 1j, tol), _scaled_identity(n, 2j, tol))],
            tol,
        )
        expected_ratio = float(np.log(1.5) / np.log(2.0))
        fixture_gap = abs(fixture.max_ratio - expected_ratio)
        passed = passed and fixture_gap <= CONTRACTION_FIXTURE_SLACK
        observed += f"; fixture ratio {fixture.max_ratio!r}"
    return TrialOutcome(
        passed=passed,
        defect=report.max_ratio,
        observed=observed,
        expected="max ratio < 1",
        tallies=("conjugated" if conjugator is not None else "plain",),
    )


@REGISTRY.register(
    "compression",
    "Z -> v*Zv does not increase distances for unit v",
    (2, 3, 4),
)
def compression_trial(ctx: TrialContext) -> TrialOutcome:
    n, rng, tol = ctx.n, ctx.rng, ctx.tol
    v = random_unit_vector(n, rng)
    ctx.matrix("v", np.diag(v))
    z1 = ctx.point("z1", random_siegel_point(n, rng, tol))
    z2 = ctx.point("z2", random_siegel_point(n, rng, tol))
    check = compression_check(v, z1, z2, tol)
    return TrialOutcome(
        passed=check.holds,
        defect=max(0.0, check.lhs - check.rhs),
        observed=f"compressed {check.lhs!r}, full {check.rhs!r}",
        expected="compressed <= full",
    )


@REGISTRY.register(
    "block-psd",
    "the pseudo-inverse block criterion agrees with the spectrum",
    ALL_DIMS,
)
def block_psd_trial(ctx: TrialContext) -> TrialOutcome:
    n, rng, tol = ctx.n, ctx.rng, ctx.tol
    blocks = random_self_adjoint_blocks(n, rng, tol)
    m = ctx.matrix("m", blocks.assemble())
    direct = is_psd(m, tol)
    verdict = block_psd_criterion(blocks, tol)
    agree = verdict.alpha_form == direct.holds == verdict.gamma_form
    return TrialOutcome(
        passed=agree,
        defect=max(0.0, -direct.min_eigenvalue),
        observed=(
            f"alpha form {verdict.alpha_form}, gamma form "
            f"{verdict.gamma_form}, spectrum {direct.holds}"
        ),
        expected="all three agree",
        tallies=(
            "psd" if direct.holds else "not-psd",
            "agree" if agree else "disagree",
        ),
    )


@REGISTRY.register(
    "converse-probe",
    "tallies i(S*JS - J) >= 0 against observed preservation; asserts "
    "only the proven direction",
    SMALL_DIMS,
)
def converse_probe_trial(ctx: TrialContext) -> TrialOutcome:
    n, rng, tol = ctx.n, ctx.rng, ctx.tol
    s = ctx.block("s", random_complex_symplectic(n, rng))
    m = classifier_matrix(s, tol)
    psd = is_psd(m, tol)
    conditions = classifier_block_conditions(s, tol).all()
    statuses = [
        mobius_apply(s, random_siegel_point(n, rng, tol), tol).status
        for _ in range(ctx.samples_per_map)
    ]
    preserves = all(st is ActionStatus.IN_UPPER for st in statuses)

    candidates: list[tuple[str, str]] = []
    if preserves and not psd.holds:
        candidates.append(
            (
                "preserves-without-psd",
                f"all {len(statuses)} samples stayed in the upper space "
                f"with min eigenvalue {psd.min_eigenvalue:.6e}",
            )
        )
    if conditions != psd.holds:
        candidates.append(
            (
                "conditions-differ",
                f"block conditions {conditions}, M >= 0 {psd.holds}",
            )
        )
    return TrialOutcome(
        passed=preserves or not psd.holds,
        defect=max(0.0, -psd.min_eigenvalue),
        observed=f"M >= 0 {psd.holds}, preserved {preserves}",
        expected="M >= 0 implies preservation",
        tallies=(
            f"psd={psd.holds}:preserved={preserves}",
            f"conditions-match={conditions == psd.holds}",
        ),
        candidates=tuple(candidates),
    )
