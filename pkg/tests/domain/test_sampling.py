import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.domain.services.matrixcore import hermitian_defect, is_psd
from src.domain.services.sampling import (
    SPECTRAL_SPREAD,
    haar_unitary,
    random_classifiable_complex_symplectic,
    random_complex_symplectic,
    random_orthogonal,
    random_pure_imaginary_symplectic,
    random_real_antisymplectic,
    random_real_symplectic,
    random_self_adjoint_blocks,
    random_siegel_point,
    random_stabilizer_element,
    random_unit_vector,
)
from src.domain.services.symplectic import (
    classifier_matrix,
    is_antisymplectic,
    is_symplectic,
)

DIMS = [1, 2, 3, 4]


class TestDeterminism:
    def test_same_seed_same_samples(self):
        first = random_real_symplectic(3, np.random.default_rng([7, 1]))
        second = random_real_symplectic(3, np.random.default_rng([7, 1]))
        assert_allclose(first.s, second.s, rtol=0, atol=0)

    def test_different_trials_differ(self):
        first = random_real_symplectic(3, np.random.default_rng([7, 1]))
        second = random_real_symplectic(3, np.random.default_rng([7, 2]))
        assert not np.allclose(first.s, second.s)


class TestGroupSamplers:
    @pytest.mark.parametrize("n", DIMS)
    def test_orthogonal_and_unitary(self, n, rng):
        q = random_orthogonal(n, rng)
        u = haar_unitary(n, rng)
        assert_allclose(q.T @ q, np.eye(n), atol=1e-12)
        assert_allclose(u.conj().T @ u, np.eye(n), atol=1e-12)

    @pytest.mark.parametrize("n", DIMS)
    def test_real_symplectic(self, n, rng, tol):
        for _ in range(10):
            s = random_real_symplectic(n, rng)
            assert s.is_real(tol)
            assert is_symplectic(s, tol)

    @pytest.mark.parametrize("n", DIMS)
    def test_real_antisymplectic(self, n, rng, tol):
        s = random_real_antisymplectic(n, rng)
        assert s.is_real(tol)
        assert is_antisymplectic(s, tol)

    @pytest.mark.parametrize("n", DIMS)
    def test_pure_imaginary_symplectic(self, n, rng, tol):
        s = random_pure_imaginary_symplectic(n, rng)
        assert s.is_purely_imaginary(tol)
        assert is_symplectic(s, tol)

    @pytest.mark.parametrize("n", DIMS)
    def test_stabilizer_element_is_orthogonal_symplectic(self, n, rng, tol):
        u = random_stabilizer_element(n, rng)
        assert is_symplectic(u, tol)
        assert_allclose(u.s.T @ u.s, np.eye(2 * n), atol=1e-12)
        assert_allclose(u.a, u.d)
        assert_allclose(u.b, -u.c)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_classifiable_complex_symplectic(self, n, rng, tol):
        for _ in range(5):
            s = random_classifiable_complex_symplectic(n, rng)
            assert is_symplectic(s, tol)
            assert is_psd(classifier_matrix(s, tol), tol).holds

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_complex_symplectic(self, n, rng, tol):
        s = random_complex_symplectic(n, rng)
        assert is_symplectic(s, tol)


class TestPointSamplers:
    @pytest.mark.parametrize("n", DIMS)
    def test_imaginary_part_spectrum(self, n, rng, tol):
        z = random_siegel_point(n, rng, tol)
        w = np.linalg.eigvalsh(z.y.real)
        assert w.min() >= np.exp(-SPECTRAL_SPREAD) * (1 - 1e-9)
        assert w.max() <= np.exp(SPECTRAL_SPREAD) * (1 + 1e-9)
        assert_allclose(z.z, z.z.T)

    def test_unit_vector(self, rng):
        v = random_unit_vector(5, rng)
        assert np.linalg.norm(v) == pytest.approx(1.0)


class TestSelfAdjointBlocks:
    @pytest.mark.parametrize("n", DIMS)
    def test_assembled_matrix_is_hermitian(self, n, rng, tol):
        for _ in range(8):
            m = random_self_adjoint_blocks(n, rng, tol).assemble()
            assert m.shape == (2 * n, 2 * n)
            assert hermitian_defect(m) == 0.0
