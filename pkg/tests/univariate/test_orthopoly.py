"""Tests for univariate families, kernels and partial sums"""

import numpy as np
import pytest

from wedge_orthopoly.univariate.jacobi import JacobiParams
from wedge_orthopoly.univariate.orthopoly import (
    OrthogonalizationError,
    build_family,
    fourier_coefficients,
    jacobi_family,
    kernel_1d,
    parseval_sums,
    partial_sum_1d,
    stieltjes_procedure,
)
from wedge_orthopoly.univariate.quadrature import clenshaw_curtis_rule
from wedge_orthopoly.univariate.weights import WeightSpec


def _cubic(x):
    return 1.0 - 2.0 * x + 0.5 * x**3


class TestWeightSpec:

    def test_exactly_one_source(self):
        """A weight is either Jacobi or general, never both"""
        with pytest.raises(ValueError):
            WeightSpec()
        with pytest.raises(ValueError):
            WeightSpec(params=JacobiParams(0, 0), func=np.exp)

    def test_positive_normalization(self):
        """Normalization must be positive"""
        with pytest.raises(ValueError):
            WeightSpec.general(np.exp, normalization=0.0)

    def test_normalized_jacobi_mass(self):
        """c * w integrates to one"""
        assert WeightSpec.jacobi(0.5, 1.5).mass() == pytest.approx(1.0, rel=1e-13)

    def test_general_mass(self):
        """General weights use Clenshaw-Curtis against the weight"""
        w = WeightSpec.general(lambda x: np.exp(x))
        assert w.mass(128) == pytest.approx(np.e - 1, rel=1e-12)

    def test_derived_weight(self):
        """Derived weight multiplies by (1-x)^2"""
        jac = WeightSpec.jacobi(0.5, 0.5).derived()
        assert jac.params.gamma == 2.5
        gen = WeightSpec.general(lambda x: np.ones_like(x)).derived()
        np.testing.assert_allclose(gen(np.array([0.0, 0.5, 1.0])), [1.0, 0.25, 0.0])


class TestFamilies:

    def test_stieltjes_matches_jacobi_recurrence(self):
        """Stieltjes on x(1-x) recovers the closed-form Jacobi coefficients"""
        n = 10
        closed = jacobi_family(WeightSpec.jacobi(1.0, 1.0, normalized=False), n)
        general = stieltjes_procedure(WeightSpec.general(lambda x: x * (1 - x)), n)
        np.testing.assert_allclose(general.a, closed.a, atol=1e-12)
        np.testing.assert_allclose(general.b[1:], closed.b[1:], atol=1e-12)
        assert general.norms[0] == pytest.approx(1.0 / 6.0, rel=1e-12)

    def test_monic_family_orthogonal(self):
        """Stieltjes polynomials are orthogonal under their own measure"""
        op = stieltjes_procedure(WeightSpec.general(lambda x: np.exp(-x) * np.sqrt(x + 0.1)), 8)
        table = op.table(op.nodes)
        gram = (table * op.mu) @ table.T
        np.testing.assert_allclose(gram, np.diag(op.norms), atol=1e-12 * np.max(op.norms))

    def test_breakdown_on_too_few_nodes(self):
        """Degree beyond the node count loses positivity"""
        rule = clenshaw_curtis_rule(3, (0.0, 1.0))
        w = WeightSpec.general(lambda x: np.ones_like(x))
        with pytest.raises(OrthogonalizationError) as info:
            stieltjes_procedure(w, 5, rule=rule)
        assert info.value.degree == 3

    def test_build_family_dispatch(self):
        """Jacobi weights take the closed form"""
        assert build_family(WeightSpec.jacobi(0, 0), 4).kind == "jacobi"
        assert build_family(WeightSpec.general(np.exp), 4).kind == "monic"

    def test_jacobi_family_rejects_general_weight(self):
        """jacobi_family needs Jacobi exponents"""
        with pytest.raises(ValueError):
            jacobi_family(WeightSpec.general(np.exp), 3)

    def test_degree_beyond_family(self):
        """Evaluating past the built degree is an error"""
        op = build_family(WeightSpec.jacobi(0, 0), 3)
        with pytest.raises(ValueError):
            op.table(0.5, 4)


class TestKernelsAndSums:

    def test_kernel_reproduces_polynomials(self):
        """int k_n(x, y) q(y) w(y) dy = q(x) for deg q <= n"""
        op = build_family(WeightSpec.jacobi(0.5, 1.5), 6)
        x = np.array([0.1, 0.4, 0.9])
        for xi in x:
            k = kernel_1d(op, 4, np.full_like(op.nodes, xi), op.nodes)
            assert op.mu @ (k * _cubic(op.nodes)) == pytest.approx(_cubic(xi), rel=1e-12)

    def test_kernel_symmetric(self):
        """k_n(x, y) = k_n(y, x)"""
        op = build_family(WeightSpec.jacobi(0.0, 2.0), 5)
        x, y = np.array([0.2, 0.7]), np.array([0.9, 0.05])
        np.testing.assert_allclose(kernel_1d(op, 5, x, y), kernel_1d(op, 5, y, x))

    def test_partial_sum_exact_for_polynomials(self):
        """s_n f = f once n reaches the degree"""
        op = build_family(WeightSpec.jacobi(0.0, 0.0), 6)
        x = np.linspace(0, 1, 11)
        np.testing.assert_allclose(partial_sum_1d(op, _cubic, 3, x), _cubic(x), atol=1e-13)

    def test_projection_resolved(self):
        """Smooth functions are resolved by the default quadrature"""
        op = build_family(WeightSpec.jacobi(1.0, 0.0), 10)
        assert fourier_coefficients(op, np.exp, 10).converged

    def test_parseval_monotone(self):
        """Running sums increase towards the squared norm"""
        op = build_family(WeightSpec.jacobi(0.0, 0.0), 12)
        sums, norm = parseval_sums(op, lambda x: np.abs(x - 0.3), 12)
        assert np.all(np.diff(sums) >= -1e-15)
        assert sums[-1] <= norm + 1e-12
        assert norm - sums[-1] < 1e-3

    def test_parseval_equality_for_polynomial(self):
        """Bessel becomes equality for polynomials"""
        op = build_family(WeightSpec.jacobi(0.5, 0.5), 5)
        sums, norm = parseval_sums(op, _cubic, 5)
        assert sums[3] == pytest.approx(norm, rel=1e-12)
