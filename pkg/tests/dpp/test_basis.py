"""Tests for discretized orthonormal families on the wedge"""

import numpy as np
import pytest

from wedge_orthopoly.dpp.basis import (
    DiscretizationError,
    arc_coordinate,
    coulomb_basis,
    from_arc,
    kernel_matrix,
    orthonormal_wedge_basis,
)
from wedge_orthopoly.wedge.geometry import Segment, WedgePoint


POINTS = [
    WedgePoint(Segment.TOP, 0.1),
    WedgePoint(Segment.TOP, 0.6),
    WedgePoint(Segment.RIGHT, 0.3),
    WedgePoint(Segment.RIGHT, 0.95),
]


class TestArcCoordinate:

    def test_arc_coordinate(self):
        """Top keeps t, Right maps t to 2 - t"""
        assert arc_coordinate(Segment.TOP, 0.25) == 0.25
        assert arc_coordinate(Segment.RIGHT, 0.25) == 1.75

    def test_from_arc(self):
        """Arc positions map back to wedge points"""
        assert from_arc(0.5) == WedgePoint(Segment.TOP, 0.5)
        assert from_arc(1.5) == WedgePoint(Segment.RIGHT, 0.5)
        assert from_arc(1.0).is_corner
        assert from_arc(2.0) == WedgePoint(Segment.RIGHT, 0.0)


class TestOrthonormalWedgeBasis:

    @pytest.mark.parametrize("alpha,gamma", [(0.0, 0.0), (1.0, 2.0)])
    def test_discrete_gram(self, alpha, gamma):
        """Grid Gram matrix is the identity"""
        basis = orthonormal_wedge_basis(alpha, gamma, 9, grid_points=512)
        assert basis.size == 9
        assert basis.gram_deviation() < 1e-10
        assert basis.kernel_trace() == pytest.approx(9.0, rel=1e-10)

    def test_exact_evaluation_matches_grid(self):
        """Off-grid evaluation agrees with the stored columns"""
        basis = orthonormal_wedge_basis(0.0, 1.0, 5, grid_points=256)
        j = 100
        point = WedgePoint(Segment.TOP, float(basis.a[j]))
        np.testing.assert_allclose(basis.evaluate(point), basis.values[j], atol=1e-12)

    def test_singular_weights_rejected(self):
        """Sampling grids need alpha, gamma >= 0"""
        with pytest.raises(ValueError):
            orthonormal_wedge_basis(-0.5, 0.0, 4)
        with pytest.raises(ValueError):
            orthonormal_wedge_basis(0.0, 0.0, 0)

    def test_coarse_grid(self):
        """A grid too coarse for the family raises DiscretizationError"""
        with pytest.raises(DiscretizationError):
            orthonormal_wedge_basis(0.0, 0.0, 30, grid_points=8)


class TestCoulombBasis:

    def test_single_function_is_constant(self):
        """N = 1 gives 1 / sqrt(arc length 2)"""
        basis = coulomb_basis(1, grid_points=64)
        np.testing.assert_allclose(np.abs(basis.values[:, 0]), 1.0 / np.sqrt(2.0), atol=1e-13)

    def test_discrete_gram(self):
        """Modified Gram-Schmidt leaves an orthonormal system"""
        basis = coulomb_basis(10, grid_points=512)
        assert basis.gram_deviation() < 1e-10
        assert np.iscomplexobj(basis.values)

    def test_exact_evaluation_matches_grid(self):
        """Monomial coefficients reproduce the grid columns"""
        basis = coulomb_basis(6, grid_points=256)
        j = 300
        point = WedgePoint(Segment.RIGHT, float(2.0 - basis.a[j]))
        np.testing.assert_allclose(basis.evaluate(point), basis.values[j], atol=1e-10)

    def test_rank_loss(self):
        """More functions than distinct grid points cannot be orthonormalized"""
        with pytest.raises(DiscretizationError):
            coulomb_basis(8, grid_points=3)


class TestKernel:

    def test_kernel_matrix_psd(self):
        """Kernel at arbitrary points is Hermitian positive semidefinite"""
        basis = coulomb_basis(4, grid_points=256)
        K = kernel_matrix(basis, POINTS)
        np.testing.assert_allclose(K, K.conj().T, atol=1e-13)
        assert np.min(np.linalg.eigvalsh(K)) > -1e-12

    def test_kernel_diagonal_and_intensity(self):
        """Intensity is K(x,x) times the measure density"""
        basis = orthonormal_wedge_basis(0.0, 1.0, 4, grid_points=256)
        K = kernel_matrix(basis, POINTS)
        density = np.array([1.0 - p.t for p in POINTS]) * 2.0
        np.testing.assert_allclose(basis.intensity(POINTS), np.real(np.diag(K)) * density, rtol=1e-12)

    def test_grid_kernel(self):
        """Without points the grid kernel is returned"""
        basis = coulomb_basis(3, grid_points=32)
        assert kernel_matrix(basis).shape == (64, 64)
