"""Tests for contour geometry and base Stieltjes transforms"""

import numpy as np
import pytest
from scipy import integrate

from wedge_orthopoly.operators.jacobi_operators import plain_basis
from wedge_orthopoly.stieltjes.transform import (
    ContourError,
    StieltjesQuery,
    cauchy_weight_integral,
    contour_distance,
    outward_normal,
    stieltjes_base,
    stieltjes_element,
    stieltjes_oracle,
)
from wedge_orthopoly.univariate.jacobi import JacobiParams
from wedge_orthopoly.univariate.quadrature import gauss_rule


def _p0_at_two() -> complex:
    """S[P_0 w](2) for the uniform weight, one log difference per segment"""
    top, right = 2 - 1j, -1j
    return (np.log(top) - np.log(top - 1)) - 1j * (np.log(right) - np.log(right - 1))


class TestQuery:

    def test_defaults(self):
        """z is stored as a complex number"""
        q = StieltjesQuery(2)
        assert q.z == 2 + 0j
        assert q.mode == "auto"

    def test_invalid_mode(self):
        """Unknown modes are rejected"""
        with pytest.raises(ValueError):
            StieltjesQuery(2, mode="backward")

    def test_invalid_parameters(self):
        """Negative degrees and exponents <= -1 are rejected"""
        with pytest.raises(ValueError):
            StieltjesQuery(2, k_max=-1)
        with pytest.raises(ValueError):
            StieltjesQuery(2, alpha=-1.0)


class TestContourGeometry:

    def test_distance(self):
        """Distance to the nearer segment"""
        assert contour_distance(0.5 + 1j) == 0.0
        assert contour_distance(0.5 + 1.25j) == pytest.approx(0.25)
        assert contour_distance(3 + 0.5j) == pytest.approx(2.0)
        assert contour_distance(0j) == pytest.approx(1.0)

    def test_outward_normal(self):
        """Normals point away from the nearer segment"""
        assert outward_normal(0.5 + 1j) == 1j
        assert outward_normal(1 + 0.3j) == 1
        assert outward_normal(1 + 1j) == pytest.approx((1 + 1j) / np.sqrt(2))


class TestCauchyIntegral:

    @pytest.mark.parametrize("t_star", [0.3 + 0.49j, 0.3 + 0.51j, 1.2 - 0.05j, -0.1 + 0.02j])
    def test_matches_adaptive_quadrature(self, t_star):
        """Near and far branches agree with direct quadrature"""
        p = JacobiParams(0.5, 1.5)
        re, _ = integrate.quad(lambda t: (1 / (t_star - t)).real, 0, 1, weight="alg", wvar=(0.5, 1.5), limit=2000)
        im, _ = integrate.quad(lambda t: (1 / (t_star - t)).imag, 0, 1, weight="alg", wvar=(0.5, 1.5), limit=2000)
        assert cauchy_weight_integral(t_star, p) == pytest.approx(complex(re, im), rel=1e-8, abs=1e-10)

    def test_uniform_weight_is_log(self):
        """For w = 1 the integral is log t* - log(t* - 1)"""
        t_star = 0.4 + 0.2j
        expected = np.log(t_star) - np.log(t_star - 1)
        assert cauchy_weight_integral(t_star, JacobiParams(0, 0)) == pytest.approx(expected, rel=1e-14)


class TestElementTransform:

    def test_constant_at_two(self):
        """S[P_0 w](2) matches the closed log form"""
        s0, _, _ = stieltjes_base(0.0, 0.0, 2.0)
        assert s0 == pytest.approx(_p0_at_two(), rel=1e-12)

    def test_q1_against_oracle(self):
        """S[Q_1 w](2+2i) agrees with adaptive quadrature"""
        element = plain_basis(0.0, 0.0).Q(1)
        value = stieltjes_element(element, 0.0, 0.0, 2 + 2j)
        assert value == pytest.approx(stieltjes_oracle(element, 0.0, 0.0, 2 + 2j), abs=1e-10)

    @pytest.mark.parametrize("alpha,gamma", [(0.5, 0.5), (0.0, 1.5), (-0.5, 0.25)])
    def test_base_values_against_oracle(self, alpha, gamma):
        """All three base transforms agree with quadrature off the contour"""
        basis = plain_basis(alpha, gamma)
        z = 0.4 + 1.3j
        values = stieltjes_base(alpha, gamma, z)
        for value, element in zip(values, (basis.P(0), basis.P(1), basis.Q(1))):
            assert value == pytest.approx(stieltjes_oracle(element, alpha, gamma, z), rel=1e-9, abs=1e-11)

    @pytest.mark.parametrize("z", [0.5 + 1.03j, 1.03 + 0.4j, 1.5 + 1.5j])
    def test_high_degree_against_gauss_sum(self, z):
        """Degree 20 transforms agree with a 1200-point Gauss-Jacobi sum per segment"""
        alpha, gamma = 0.5, 0.25
        p = JacobiParams(alpha, gamma)
        rule = gauss_rule(1200, p)
        basis = plain_basis(alpha, gamma)
        for element in (basis.P(20), basis.Q(20)):
            top, right = z - 1j, -1j * (z - 1)
            expected = rule.weights @ (element.on_top(rule.nodes) / (top - rule.nodes))
            expected += -1j * (rule.weights @ (element.on_right(rule.nodes) / (right - rule.nodes)))
            value = stieltjes_element(element, alpha, gamma, z)
            assert value == pytest.approx(expected, rel=1e-8, abs=1e-12)

    def test_oracle_accepts_plain_functions(self):
        """The oracle integrates any wedge function, here x + y"""
        z = 2 + 2j
        p1 = plain_basis(0.0, 0.0).P(1)
        # P_1 = 2x + 2y - 3 for the uniform weight
        constant = stieltjes_oracle(lambda x, y: np.ones_like(x), 0.0, 0.0, z)
        expected = 0.5 * (stieltjes_oracle(p1, 0.0, 0.0, z) + 3 * constant)
        assert stieltjes_oracle(lambda x, y: x + y, 0.0, 0.0, z) == pytest.approx(expected, rel=1e-12)

    def test_far_field_mass(self):
        """z S[P_0 w](z) tends to the total mass 2, first moment 3(1+i)/2 next"""
        z = 1e4 * np.exp(0.3j)
        s0, _, _ = stieltjes_base(0.0, 0.0, z)
        assert abs(z * s0 - 2.0) < 1e-3
        assert abs(z * s0 - 2.0 - 1.5 * (1 + 1j) / z) < 1e-6

    def test_on_contour_needs_limit(self):
        """Points on the wedge raise ContourError unless the limit is requested"""
        element = plain_basis(0.0, 0.0).P(1)
        with pytest.raises(ContourError):
            stieltjes_element(element, 0.0, 0.0, 0.5 + 1j)
        with pytest.raises(ContourError):
            stieltjes_oracle(element, 0.0, 0.0, 0.5 + 1j)

    def test_limit_from_outside(self):
        """Limit value is the outward boundary value"""
        element = plain_basis(0.0, 0.0).P(1)
        limit = stieltjes_element(element, 0.0, 0.0, 0.5 + 1j, limit=True)
        nearby = stieltjes_element(element, 0.0, 0.0, 0.5 + 1.000001j)
        assert np.isfinite(limit)
        assert abs(limit - nearby) < 1e-4
