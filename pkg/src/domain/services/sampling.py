"""
Seeded samplers for the property suites.

Every sampler takes an explicit `numpy.random.Generator`; nothing reads
global random state, so a suite trial is reproducible from its seed alone.
Symplectic samples are products of generators that are symplectic by
construction, never exponentials.
"""
import numpy as np
import scipy.linalg as sla

from src.domain.entities.block_symplectic import (
    BlockSymplectic,
    SelfAdjointBlocks,
)
from src.domain.entities.siegel_point import LowerSiegelPoint, SiegelPoint
from src.domain.services.siegel import make_siegel
from src.domain.services.symplectic import (
    i_minus,
    identity,
    standard_j,
)
from src.domain.value_objects.matrix import (
    ComplexMatrix,
    RealMatrix,
    frozen,
)
from src.domain.value_objects.tolerance import Tolerance

Rng = np.random.Generator

MIN_FACTORS = 3
MAX_FACTORS = 8
LOG_SPREAD = 0.5
SPECTRAL_SPREAD = 1.5
MIN_EIGENVALUE_GAP = 0.1


def random_orthogonal(n: int, rng: Rng) -> RealMatrix:
    """Haar orthogonal matrix from the QR factorization of a Gaussian."""
    q, r = sla.qr(rng.standard_normal((n, n)))
    return q * np.sign(np.diag(r))


def haar_unitary(n: int, rng: Rng) -> ComplexMatrix:
    """Haar unitary matrix; the phases of diag(R) are divided out."""
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = sla.qr(g)
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases


def random_symmetric(n: int, rng: Rng) -> RealMatrix:
    """Real symmetric with N(0, 1) upper triangle."""
    r = rng.standard_normal((n, n))
    return (r + r.T) / 2


def _spd(n: int, rng: Rng, spread: float) -> RealMatrix:
    q = random_orthogonal(n, rng)
    w = np.exp(rng.uniform(-spread, spread, n))
    return (q * w) @ q.T


def _shear(n: int, rng: Rng) -> BlockSymplectic:
    b = random_symmetric(n, rng)
    b /= max(1.0, float(np.linalg.norm(b, 2)))
    eye = np.eye(n)
    zero = np.zeros((n, n))
    if rng.random() < 0.5:
        return BlockSymplectic.from_blocks(eye, b, zero, eye)
    return BlockSymplectic.from_blocks(eye, zero, b, eye)


def _dilation(n: int, rng: Rng) -> BlockSymplectic:
    w = np.exp(rng.uniform(-LOG_SPREAD, LOG_SPREAD, n))
    g = random_orthogonal(n, rng) @ np.diag(w) @ random_orthogonal(n, rng)
    zero = np.zeros((n, n))
    return BlockSymplectic.from_blocks(g, zero, zero, np.linalg.inv(g).T)


def random_real_symplectic(n: int, rng: Rng) -> BlockSymplectic:
    """
    Product of 3 to 8 real generators: shears [[I, B], [O, I]] and
    [[I, O], [B, I]] with B symmetric, dilations [[G, O], [O, G^-t]] and J.
    """
    s = identity(n)
    for _ in range(int(rng.integers(MIN_FACTORS, MAX_FACTORS + 1))):
        kind = int(rng.integers(3))
        if kind == 0:
            factor = _shear(n, rng)
        elif kind == 1:
            factor = _dilation(n, rng)
        else:
            factor = standard_j(n).as_block()
        s = s @ factor
    return s


def random_real_antisymplectic(n: int, rng: Rng) -> BlockSymplectic:
    """I- P for a random real symplectic P."""
    return i_minus(n) @ random_real_symplectic(n, rng)


def random_pure_imaginary_symplectic(n: int, rng: Rng) -> BlockSymplectic:
    """i I- P: purely imaginary and symplectic."""
    return random_real_antisymplectic(n, rng).scaled(1j)


def random_stabilizer_element(n: int, rng: Rng) -> BlockSymplectic:
    """[[A, B], [-B, A]] with A + iB Haar unitary."""
    u = haar_unitary(n, rng)
    return BlockSymplectic.from_blocks(u.real, u.imag, -u.imag, u.real)


def random_siegel_point(n: int, rng: Rng, tol: Tolerance) -> SiegelPoint:
    """X symmetric Gaussian, Y = Q diag(exp(U(-1.5, 1.5))) Q^t."""
    x = random_symmetric(n, rng)
    y = _spd(n, rng, SPECTRAL_SPREAD)
    return make_siegel(x + 1j * y, tol)


def random_lower_siegel_point(
    n: int, rng: Rng, tol: Tolerance
) -> LowerSiegelPoint:
    return random_siegel_point(n, rng, tol).conjugate()


def random_classifiable_complex_symplectic(
    n: int, rng: Rng
) -> BlockSymplectic:
    """
    P1 T_(X + iY) P2 with real symplectic P1, P2 and Y >= 0 of random rank.

    i(S*JS - J) = P2^t diag(O, 2Y) P2 is positive semidefinite.
    """
    rank = int(rng.integers(0, n + 1))
    y = _spd(n, rng, LOG_SPREAD)
    if rank < n:
        w, v = sla.eigh(y)
        w[: n - rank] = 0.0
        y = (v * w) @ v.T
    x = random_symmetric(n, rng)
    eye = np.eye(n)
    shift = BlockSymplectic.from_blocks(
        eye, x + 1j * y, np.zeros((n, n)), eye
    )
    return (
        random_real_symplectic(n, rng)
        @ shift
        @ random_real_symplectic(n, rng)
    )


def _complex_symmetric(n: int, rng: Rng) -> ComplexMatrix:
    b = random_symmetric(n, rng) + 1j * random_symmetric(n, rng)
    return b / max(1.0, float(np.linalg.norm(b, 2)))


def random_complex_symplectic(n: int, rng: Rng) -> BlockSymplectic:
    """
    Products of complex generators: shears with complex symmetric B,
    dilations with complex G and J. No sign of i(S*JS - J) is implied.
    """
    eye = np.eye(n)
    zero = np.zeros((n, n))
    s = identity(n)
    for _ in range(int(rng.integers(MIN_FACTORS, MAX_FACTORS + 1))):
        kind = int(rng.integers(4))
        if kind == 0:
            b = _complex_symmetric(n, rng)
            factor = BlockSymplectic.from_blocks(eye, b, zero, eye)
        elif kind == 1:
            b = _complex_symmetric(n, rng)
            factor = BlockSymplectic.from_blocks(eye, zero, b, eye)
        elif kind == 2:
            g = haar_unitary(n, rng) @ _dilation(n, rng).a
            factor = BlockSymplectic.from_blocks(
                g, zero, zero, np.linalg.inv(g).T
            )
        else:
            factor = standard_j(n).as_block()
        s = s @ factor
    return s


def random_unit_vector(n: int, rng: Rng) -> ComplexMatrix:
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return v / np.linalg.norm(v)


def _low_rank_factor(n: int, cols: int, rng: Rng) -> ComplexMatrix:
    rank = int(rng.integers(0, n))
    left = rng.standard_normal((n, rank)) + 1j * rng.standard_normal(
        (n, rank)
    )
    right = rng.standard_normal((rank, cols))
    return left @ right


def random_self_adjoint_blocks(
    n: int, rng: Rng, tol: Tolerance
) -> SelfAdjointBlocks:
    """
    Self-adjoint 2n x 2n block matrices, one of four kinds chosen at random:

    0. L L* with a rank-deficient upper factor (PSD, singular alpha).
    1. L L* with a rank-deficient lower factor (PSD, singular gamma).
    2. V diag(w) V* with |w| >= 0.1 and at least one negative w.
    3. Singular alpha with beta leaving its range (not PSD).
    """
    cols = 2 * n
    full = rng.standard_normal((n, cols)) + 1j * rng.standard_normal(
        (n, cols)
    )
    kind = int(rng.integers(4))
    if kind == 0:
        factor = np.vstack([_low_rank_factor(n, cols, rng), full])
        m = factor @ factor.conj().T
    elif kind == 1:
        factor = np.vstack([full, _low_rank_factor(n, cols, rng)])
        m = factor @ factor.conj().T
    elif kind == 2:
        w = rng.uniform(MIN_EIGENVALUE_GAP, 2.0, cols)
        w *= rng.choice([-1.0, 1.0], cols)
        if w.min() > 0:
            flip = int(rng.integers(cols))
            w[flip] = -w[flip]
        v = haar_unitary(cols, rng)
        m = (v * w) @ v.conj().T
    else:
        upper = _low_rank_factor(n, n, rng)
        alpha = upper @ upper.conj().T
        beta = full[:, :n]
        gamma = np.eye(n) * rng.uniform(1.0, 3.0)
        m = np.block([[alpha, beta], [beta.conj().T, gamma]])
    m = (m + m.conj().T) / 2
    return SelfAdjointBlocks.split(frozen(m), tol)
