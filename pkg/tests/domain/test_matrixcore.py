import numpy as np
import pytest
import scipy.linalg as sla
from numpy.testing import assert_allclose

from src.domain.exceptions import (
    DimensionMismatchError,
    InvalidToleranceError,
    NoConvergenceError,
    NonFiniteMatrixError,
    NotHermitianError,
    NotPositiveDefiniteError,
)
from src.domain.services import matrixcore
from src.domain.services.matrixcore import (
    hermitian_eigen,
    is_psd,
    operator_norm,
    pseudo_inverse,
    singular_values,
    solve_left,
    solve_right,
    spd_inv_sqrt,
    spd_sqrt,
)
from src.domain.services.sampling import random_real_symplectic
from src.domain.services.symplectic import classifier_matrix
from src.domain.value_objects.matrix import complex_matrix
from src.domain.value_objects.tolerance import Tolerance


def _hermitian(rng: np.random.Generator, n: int) -> np.ndarray:
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (g + g.conj().T) / 2


def _spd(rng: np.random.Generator, n: int) -> np.ndarray:
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return g @ g.conj().T + np.eye(n)


class TestValueObjects:
    def test_complex_matrix_is_read_only(self):
        m = complex_matrix([[1.0, 2.0], [3.0, 4.0]])
        assert m.dtype == np.complex128
        with pytest.raises(ValueError):
            m[0, 0] = 5.0

    def test_complex_matrix_rejects_non_finite_entries(self):
        with pytest.raises(NonFiniteMatrixError) as info:
            complex_matrix([[np.nan, 1.0], [np.inf, 0.0]])
        assert info.value.count == 2

    def test_complex_matrix_rejects_vectors(self):
        with pytest.raises(DimensionMismatchError):
            complex_matrix([1.0, 2.0])

    @pytest.mark.parametrize("value", [0.0, -1e-9, 1e-2])
    def test_tolerance_outside_range_is_rejected(self, value):
        with pytest.raises(InvalidToleranceError):
            Tolerance.uniform(value)


class TestHermitianEigen:
    def test_reconstructs_the_matrix(self, rng, tol):
        m = complex_matrix(_hermitian(rng, 4))
        eig = hermitian_eigen(m, tol)
        v, w = eig.eigenvectors, eig.eigenvalues
        assert np.all(np.diff(w) >= 0)
        assert_allclose(v @ np.diag(w) @ v.conj().T, m, atol=1e-12)
        assert_allclose(v.conj().T @ v, np.eye(4), atol=1e-12)

    def test_rejects_non_hermitian(self, tol):
        with pytest.raises(NotHermitianError):
            hermitian_eigen(complex_matrix([[1.0, 1.0], [0.0, 1.0]]), tol)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_seeded_fuzz(self, n, rng, tol):
        m = complex_matrix(_hermitian(rng, n))
        eig = hermitian_eigen(m, tol)
        v, w = eig.eigenvectors, eig.eigenvalues
        assert_allclose(v @ np.diag(w) @ v.conj().T, m, atol=1e-10)
        assert w.shape == (n,)
        assert np.all(np.diff(w) >= 0)
        assert_allclose(v.conj().T @ v, np.eye(n), atol=1e-12)

    def test_diagonal_literal(self, tol):
        eig = hermitian_eigen(complex_matrix(np.diag([4.0, 1.0])), tol)
        assert_allclose(eig.eigenvalues, [1.0, 4.0])


class TestSquareRoots:
    def test_sqrt_squares_back(self, rng, tol):
        p = complex_matrix(_spd(rng, 3))
        root = spd_sqrt(p, tol)
        assert_allclose(root @ root, p, atol=1e-10)
        assert_allclose(root, root.conj().T, atol=1e-12)

    def test_inverse_sqrt_inverts_sqrt(self, rng, tol):
        p = complex_matrix(_spd(rng, 3))
        product = spd_inv_sqrt(p, tol) @ spd_sqrt(p, tol)
        assert_allclose(product, np.eye(3), atol=1e-10)

    def test_semidefinite_input_is_rejected(self, tol):
        with pytest.raises(NotPositiveDefiniteError) as info:
            spd_sqrt(complex_matrix(np.diag([1.0, 0.0])), tol)
        assert info.value.min_eigenvalue == pytest.approx(0.0)

    @pytest.mark.parametrize(
        ("p", "root"),
        [
            (np.eye(2), np.eye(2)),
            (np.diag([4.0, 1.0]), np.diag([2.0, 1.0])),
        ],
    )
    def test_literal_roots(self, p, root, tol):
        assert_allclose(spd_sqrt(complex_matrix(p), tol), root, atol=1e-14)

    def test_sqrt_commutes_with_its_argument(self, rng, tol):
        p = complex_matrix(_spd(rng, 4))
        root = spd_sqrt(p, tol)
        assert_allclose(root @ p, p @ root, atol=1e-9)


class TestPseudoInverse:
    def test_penrose_identities_for_rank_deficient_input(self, rng, tol):
        left = rng.standard_normal((4, 2)) + 1j * rng.standard_normal((4, 2))
        right = rng.standard_normal((2, 3))
        a = complex_matrix(left @ right)
        p = pseudo_inverse(a, tol)
        assert_allclose(a @ p @ a, a, atol=1e-10)
        assert_allclose(p @ a @ p, p, atol=1e-10)
        assert_allclose((a @ p).conj().T, a @ p, atol=1e-10)
        assert_allclose((p @ a).conj().T, p @ a, atol=1e-10)

    def test_zero_matrix_has_zero_pseudo_inverse(self, tol):
        p = pseudo_inverse(complex_matrix(np.zeros((2, 3))), tol)
        assert p.shape == (3, 2)
        assert_allclose(p, 0.0)

    def test_invertible_input_gives_the_inverse(self, rng, tol):
        m = complex_matrix(_spd(rng, 3))
        assert_allclose(m @ pseudo_inverse(m, tol), np.eye(3), atol=1e-10)

    def test_diagonal_literal(self, tol):
        p = pseudo_inverse(complex_matrix(np.diag([2.0, 0.0])), tol)
        assert_allclose(p, np.diag([0.5, 0.0]), atol=1e-14)


class TestNormsAndSolves:
    def test_operator_norm_is_largest_singular_value(self):
        m = complex_matrix(np.diag([3.0, -4.0]))
        assert operator_norm(m) == pytest.approx(4.0)
        assert_allclose(singular_values(m), [4.0, 3.0])

    @pytest.mark.parametrize(
        ("m", "expected"),
        [(np.eye(3), 1.0), (np.diag([3.0, -5.0]), 5.0)],
    )
    def test_literal_norms(self, m, expected):
        assert operator_norm(complex_matrix(m)) == pytest.approx(expected)

    def test_submultiplicative(self, rng):
        for _ in range(10):
            a = complex_matrix(_hermitian(rng, 3) + _spd(rng, 3) * 1j)
            b = complex_matrix(rng.standard_normal((3, 3)))
            bound = operator_norm(a) * operator_norm(b)
            assert operator_norm(complex_matrix(a @ b)) <= bound * (1 + 1e-12)

    def test_matches_largest_gram_eigenvalue(self, rng, tol):
        g = rng.standard_normal((3, 4)) + 1j * rng.standard_normal((3, 4))
        m = complex_matrix(g)
        gram = complex_matrix(m.conj().T @ m)
        largest = hermitian_eigen(gram, tol).eigenvalues[-1]
        assert operator_norm(m) == pytest.approx(np.sqrt(largest), rel=1e-10)

    def test_unitary_has_norm_one(self, rng):
        g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        q, _ = np.linalg.qr(g)
        assert operator_norm(complex_matrix(q)) == pytest.approx(1.0)

    def test_solve_right_and_left(self, rng):
        e = complex_matrix(rng.standard_normal((3, 3)))
        f = complex_matrix(rng.standard_normal((3, 3)) + 3 * np.eye(3))
        assert_allclose(solve_right(e, f) @ f, e, atol=1e-12)
        assert_allclose(f @ solve_left(f, e), e, atol=1e-12)


class TestIsPsd:
    def test_small_negative_eigenvalue_is_within_slack(self, tol):
        verdict = is_psd(complex_matrix(np.diag([1.0, -1e-12])), tol)
        assert verdict.holds
        assert verdict.witness is None

    def test_negative_eigenvalue_comes_with_witness(self, tol):
        verdict = is_psd(complex_matrix(np.diag([1.0, -1e-3])), tol)
        assert not verdict.holds
        assert verdict.min_eigenvalue == pytest.approx(-1e-3)
        assert verdict.witness is not None
        assert abs(verdict.witness[1]) == pytest.approx(1.0)

    def test_identity_holds(self, tol):
        verdict = is_psd(complex_matrix(np.eye(3)), tol)
        assert verdict.holds
        assert verdict.min_eigenvalue == pytest.approx(1.0)

    def test_indefinite_diagonal(self, tol):
        verdict = is_psd(complex_matrix(np.diag([1.0, -1.0])), tol)
        assert not verdict.holds
        assert verdict.min_eigenvalue == pytest.approx(-1.0)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_classifier_of_real_symplectic(self, n, rng, tol):
        s = random_real_symplectic(n, rng)
        assert is_psd(classifier_matrix(s, tol), tol).holds


class TestConvergenceFailures:
    @pytest.mark.parametrize(
        ("routine", "operation", "call"),
        [
            ("eigh", "hermitian_eigen", hermitian_eigen),
            ("eigh", "hermitian_eigen", is_psd),
            ("eigh", "hermitian_eigen", spd_sqrt),
            ("pinv", "pseudo_inverse", pseudo_inverse),
            ("norm", "operator_norm", lambda m, _: operator_norm(m)),
            ("svdvals", "singular_values", lambda m, _: singular_values(m)),
            ("solve", "solve_left", lambda m, _: solve_left(m, m)),
        ],
    )
    def test_lapack_failure_is_reported(
        self, routine, operation, call, monkeypatch, tol
    ):
        def fail(*args, **kwargs):
            raise sla.LinAlgError("did not converge")

        monkeypatch.setattr(matrixcore.sla, routine, fail)
        with pytest.raises(NoConvergenceError) as info:
            call(complex_matrix(np.eye(2)), tol)
        assert info.value.operation == operation
