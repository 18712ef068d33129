"""Tests for equal-weight and Jacobi-weight wedge bases"""

import numpy as np
import pytest

from wedge_orthopoly.univariate.weights import WeightSpec
from wedge_orthopoly.wedge.basis import (
    EqualWeightBasis,
    JacobiWedgeBasis,
    cross_ipd_PQ,
    dimension_wedge,
    eval_P_jacobi,
    eval_Q_equal,
    integral_I,
    wedge_norm_P,
)
from wedge_orthopoly.wedge.expansion import wedge_gram
from wedge_orthopoly.wedge.geometry import WedgePoint
from wedge_orthopoly.wedge.inner import WedgeWeights, inner_product_wedge
from wedge_orthopoly.univariate.jacobi import jacobi_value_at_one


UNEQUAL = (0.3, 1.2, 0.5)
RNG = np.random.default_rng(7)
XS = RNG.random(50)


def _assert_diagonal(gram, norms, rtol=1e-10):
    scale = np.sqrt(np.outer(norms, norms))
    np.testing.assert_allclose(gram / scale, np.eye(len(norms)), atol=rtol)


class TestEqualWeightBasis:

    def test_symmetry_of_P_and_antisymmetry_of_Q(self):
        """P_n(x,1) = P_n(1,x) and Q_n(x,1) = -Q_n(1,x)"""
        basis = EqualWeightBasis(WeightSpec.general(lambda x: np.exp(x) * np.sqrt(x)), 6)
        for n in range(1, 7):
            p, q = basis.P(n), basis.Q(n)
            np.testing.assert_allclose(p(XS, 1.0), p(1.0, XS), atol=1e-13)
            np.testing.assert_allclose(q(XS, 1.0), -q(1.0, XS), atol=1e-13)

    def test_gram_is_diagonal(self):
        """Elements are orthogonal with the stated norms"""
        basis = EqualWeightBasis(WeightSpec.jacobi(0.5, 1.5), 6)
        elements = basis.elements(6)
        _assert_diagonal(wedge_gram(basis, 6), [e.norm for e in elements])

    def test_q1_norm_legendre(self):
        """<Q_1, Q_1> = 2 int (1-x)^2 = 2/3 for the uniform weight"""
        basis = EqualWeightBasis(WeightSpec.jacobi(0, 0), 3)
        assert basis.Q(1).norm == pytest.approx(2.0 / 3.0)
        assert inner_product_wedge(basis.Q(1), basis.Q(1), basis.weights) == pytest.approx(2.0 / 3.0)

    def test_corner_values(self):
        """P_n(1,1) = p_n(1) and Q_n(1,1) = 0"""
        w = WeightSpec.jacobi(0.0, 1.0)
        basis = EqualWeightBasis(w, 5)
        for n in range(1, 6):
            assert basis.P(n)(1.0, 1.0) == pytest.approx(float(basis.family.evaluate(n, 1.0)))
            assert eval_Q_equal(w, n, WedgePoint("top", 1.0)) == pytest.approx(0.0)

    def test_degree_out_of_range(self):
        """Degrees beyond n_max and Q_0 are rejected"""
        basis = EqualWeightBasis(WeightSpec.jacobi(0, 0), 2)
        with pytest.raises(IndexError):
            basis.P(3)
        with pytest.raises(IndexError):
            basis.Q(0)


class TestJacobiWedgeBasis:

    def test_p1_on_top_legendre(self):
        """P_1 restricted to Top is 2t - 1 when all exponents vanish"""
        basis = JacobiWedgeBasis(0, 0, 0)
        np.testing.assert_allclose(basis.P(1).on_top(np.array([0.0, 0.5, 1.0])), [-1.0, 0.0, 1.0])

    def test_p1_norm(self):
        """<P_1, P_1> = h_1 + h_1 = 2/3"""
        basis = JacobiWedgeBasis(0, 0, 0)
        assert basis.P(1).norm == pytest.approx(2.0 / 3.0)
        assert inner_product_wedge(basis.P(1), basis.P(1), basis.weights) == pytest.approx(2.0 / 3.0)

    def test_corner_value(self):
        """P_n(1,1) = binomial(n+gamma, n)"""
        for n in range(9):
            assert eval_P_jacobi(0.4, 1.1, 0.7, n, (1.0, 1.0)) == pytest.approx(jacobi_value_at_one(n, 0.7))

    @pytest.mark.parametrize("sigma", [1.0, 2.5])
    def test_norm_closed_forms(self, sigma):
        """Closed-form norms of P_n and Q_n match quadrature"""
        alpha, beta, gamma = UNEQUAL
        basis = JacobiWedgeBasis(alpha, beta, gamma, sigma, second="Q")
        for n in range(1, 7):
            for e in (basis.P(n), basis.Q(n)):
                assert inner_product_wedge(e, e, basis.weights) == pytest.approx(e.norm, rel=1e-10)
        assert basis.P(3).norm == pytest.approx(float(wedge_norm_P(alpha, beta, gamma, sigma, 3)))

    @pytest.mark.parametrize("sigma", [1.0, 0.4])
    def test_cross_term(self, sigma):
        """<P_n, Q_n> matches the integral_I closed form"""
        basis = JacobiWedgeBasis(*UNEQUAL, sigma=sigma, second="Q")
        for n in range(1, 7):
            ip = inner_product_wedge(basis.P(n), basis.Q(n), basis.weights)
            assert ip == pytest.approx(basis.cross(n), rel=1e-10, abs=1e-13)

    def test_cross_ipd_degree_one(self):
        """<P_1, Q_1> = 1/6 for alpha=0, beta=1, gamma=0"""
        assert cross_ipd_PQ(0, 1, 0, 1) == pytest.approx(1.0 / 6.0)
        assert JacobiWedgeBasis(0, 1, 0, second="Q").cross(1) == pytest.approx(1.0 / 6.0)

    def test_equal_exponents_orthogonal(self):
        """With beta = alpha, P_n and Q_n are already orthogonal and R_n = Q_n"""
        basis = JacobiWedgeBasis(0.7, 0.7, 0.2, second="R")
        for n in range(1, 5):
            assert basis.cross(n) == pytest.approx(0.0, abs=1e-15)
            np.testing.assert_allclose(basis.R(n).on_top(XS), basis.Q(n).on_top(XS))

    def test_r_orthogonal_to_p(self):
        """R_n is orthogonal to P_n with the Gram-Schmidt norm"""
        basis = JacobiWedgeBasis(*UNEQUAL, sigma=1.7)
        assert basis.second_family == "R"
        for n in range(1, 6):
            r = basis.R(n)
            assert inner_product_wedge(basis.P(n), r, basis.weights) == pytest.approx(0.0, abs=1e-12)
            assert inner_product_wedge(r, r, basis.weights) == pytest.approx(r.norm, rel=1e-10)

    def test_full_gram_diagonal(self):
        """[1; P_1, R_1; ...] is an orthogonal system"""
        basis = JacobiWedgeBasis(*UNEQUAL, sigma=2.0)
        elements = basis.elements(6)
        _assert_diagonal(wedge_gram(basis, 6), [e.norm for e in elements])

    def test_default_second_family(self):
        """Q for equal exponents, R otherwise"""
        assert JacobiWedgeBasis(0.5, 0.5, 0).second_family == "Q"
        assert JacobiWedgeBasis(0.5, 0.6, 0).second_family == "R"
        with pytest.raises(ValueError):
            JacobiWedgeBasis(0, 0, 0, second="S")

    def test_coefficients_reproduce_element(self):
        """Monomial coefficients evaluate back to the element"""
        e = JacobiWedgeBasis(0.5, 0.5, 1.0).Q(3)
        c = e.coefficients()
        x, y = 0.3, 1.0
        assert np.polynomial.polynomial.polyval2d(x, y, c) == pytest.approx(float(e(x, y)), abs=1e-12)
        assert e.label() == "Q3"

    def test_weights_reject_sigma(self):
        """sigma must be positive"""
        with pytest.raises(ValueError):
            WedgeWeights.jacobi(0, 0, 0, sigma=0.0)


class TestClosedForms:

    def test_integral_I_values(self):
        """I_{1,0} = 1/2 and I_{1,1} = -1/6 for the uniform weight"""
        assert integral_I(1, 0, 0, 0) == pytest.approx(0.5)
        assert integral_I(1, 1, 0, 0) == pytest.approx(-1.0 / 6.0)
        assert integral_I(2, 3, 0.5, 0.5) == 0

    def test_integral_I_domain(self):
        """m must be at least one"""
        with pytest.raises(ValueError):
            integral_I(0, 0, 0, 0)

    def test_dimension(self):
        """One element at degree 0, two afterwards"""
        assert [dimension_wedge(n) for n in range(4)] == [1, 2, 2, 2]
        with pytest.raises(ValueError):
            dimension_wedge(-1)
