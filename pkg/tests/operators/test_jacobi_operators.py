"""Tests for the wedge Jacobi operators"""

import json
from fractions import Fraction

import numpy as np
import pytest

from wedge_orthopoly.operators.jacobi_operators import (
    BlockTriDiag,
    CoeffVector,
    all_labels,
    build_jacobi_operators,
    flat_index,
    labels,
    one_minus_x_closed,
    one_minus_x_oracle,
    one_minus_y_rows,
    plain_basis,
    validate_closed_forms,
    vanish_combination,
    vanish_rhs,
)


XS = np.linspace(0.0, 1.0, 9)


def _wedge_values(alpha, gamma, coeffs, x, y):
    """sum c_j b_j(x, y) over [P_0; P_1, Q_1; ...]"""
    basis = plain_basis(alpha, gamma)
    n = (len(coeffs) - 1) // 2
    total = np.zeros(np.broadcast(x, y).shape)
    for (fam, k), c in zip(all_labels(n), coeffs):
        element = basis.P(k) if fam == "P" else basis.Q(k)
        total = total + c * element(x, y)
    return total


class TestLabels:

    def test_flat_order(self):
        """[P_0; P_1, Q_1; P_2, Q_2]"""
        assert all_labels(2) == [("P", 0), ("P", 1), ("Q", 1), ("P", 2), ("Q", 2)]
        assert [flat_index(lab) for lab in all_labels(2)] == [0, 1, 2, 3, 4]
        assert labels(0) == [("P", 0)]

    def test_coeff_vector(self):
        """Coefficient vectors have odd length and degree blocks"""
        v = CoeffVector.unit(("Q", 2), 2)
        assert v.degree == 2
        np.testing.assert_allclose(v.block(2), [0.0, 1.0])
        with pytest.raises(ValueError):
            CoeffVector(np.zeros(4))


class TestClosedRows:

    def test_one_minus_x_times_constant(self):
        """(1-x) P_0 = Q_1/2 - P_1/4 + P_0/4 when alpha = gamma = 0"""
        row = one_minus_x_closed(Fraction(0), Fraction(0), 0, "P")
        assert row == {("Q", 1): Fraction(1, 2), ("P", 1): Fraction(-1, 4), ("P", 0): Fraction(1, 4)}

    @pytest.mark.parametrize("alpha,gamma", [(0.0, 0.0), (0.7, 0.7)])
    def test_closed_forms_validate(self, alpha, gamma):
        """Closed rows match quadrature projections up to degree 10"""
        report = validate_closed_forms(alpha, gamma, 10)
        assert report["passed"], report["max_deviation"]
        assert len(report["rows"]) == 21

    def test_oracle_row_support(self):
        """(1-x) P_3 only touches degrees 2..4"""
        row = one_minus_x_oracle(0.0, 0.0, 3, "P")
        for (fam, k), v in row.items():
            if k < 2:
                assert abs(v) < 1e-12

    def test_one_minus_y_symmetry(self):
        """(1-y) rows flip Q signs"""
        x_row = one_minus_x_closed(0.5, 0.5, 2, "Q")
        y_row = one_minus_y_rows(0.5, 0.5, 2, "Q")
        assert y_row[("P", 2)] == pytest.approx(-x_row[("P", 2)])
        assert y_row[("Q", 2)] == pytest.approx(x_row[("Q", 2)])

    def test_invalid_element(self):
        """Q_0 has no row; unknown families are rejected"""
        with pytest.raises(IndexError):
            one_minus_x_closed(0, 0, 0, "Q")
        with pytest.raises(ValueError):
            one_minus_x_closed(0, 0, 1, "R")


class TestVanishingCombination:

    def test_lowest_combination(self):
        """2 Q_1 - P_1 + P_0 = 4 (1-x) on the wedge"""
        top = vanish_combination(0, 0, 0, XS, np.ones_like(XS))
        right = vanish_combination(0, 0, 0, np.ones_like(XS), XS)
        np.testing.assert_allclose(top, 4 * (1 - XS), atol=1e-14)
        np.testing.assert_allclose(right, 0.0, atol=1e-14)

    def test_degree_zero_matches_rhs(self):
        """Corrected n = 0 combination equals its right-hand side"""
        alpha, gamma = 0.3, 1.4
        lhs = vanish_combination(alpha, gamma, 0, XS, np.ones_like(XS), corrected=True)
        np.testing.assert_allclose(lhs, vanish_rhs(alpha, gamma, 0, XS, np.ones_like(XS)), atol=1e-13)

    @pytest.mark.parametrize("n", range(5))
    def test_corrected_vanishes_on_right(self, n):
        """Corrected combination vanishes on x = 1 for unequal exponents"""
        value = vanish_combination(0.3, 1.4, n, np.ones_like(XS), XS, corrected=True)
        np.testing.assert_allclose(value, 0.0, atol=1e-11)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_corrected_matches_rhs_on_top(self, n):
        """On y = 1 the corrected combination is 2 (1-x)(2n+g+a+2) P_n^{(g+1,a)}"""
        alpha, gamma = 0.3, 1.4
        lhs = vanish_combination(alpha, gamma, n, XS, np.ones_like(XS), corrected=True)
        np.testing.assert_allclose(lhs, vanish_rhs(alpha, gamma, n, XS, np.ones_like(XS)), atol=1e-11)

    @pytest.mark.parametrize("alpha,gamma", [(0.0, 0.0), (0.7, 0.7), (-0.5, -0.5)])
    def test_forms_agree_for_equal_exponents(self, alpha, gamma):
        """Printed and corrected forms coincide and vanish on x = 1 when alpha = gamma"""
        for n in range(4):
            printed = vanish_combination(alpha, gamma, n, np.ones_like(XS), XS)
            corrected = vanish_combination(alpha, gamma, n, np.ones_like(XS), XS, corrected=True)
            np.testing.assert_allclose(printed, corrected, atol=1e-12)
            np.testing.assert_allclose(printed, 0.0, atol=1e-11)

    def test_printed_form_needs_equal_exponents(self):
        """Printed coefficients leave (alpha - gamma)(P_n + Q_n) on x = 1"""
        alpha, gamma = 0.3, 1.4
        printed = vanish_combination(alpha, gamma, 2, np.ones_like(XS), XS)
        corrected = vanish_combination(alpha, gamma, 2, np.ones_like(XS), XS, corrected=True)
        basis = plain_basis(alpha, gamma)
        residual = basis.P(2)(np.ones_like(XS), XS) + basis.Q(2)(np.ones_like(XS), XS)
        np.testing.assert_allclose(printed - corrected, (alpha - gamma) * residual, atol=1e-12)
        assert np.max(np.abs(printed)) > 1e-3


class TestBuildOperators:

    def test_x_times_constant(self):
        """x = 3/4 P_0 + 1/4 P_1 - 1/2 Q_1 at alpha = gamma = 0"""
        jx, _ = build_jacobi_operators(0, 0, 2, source="closed-form")
        result = jx.apply(CoeffVector.unit(("P", 0), 2))
        np.testing.assert_allclose(result.coeffs, [0.75, 0.25, -0.5, 0.0, 0.0], atol=1e-14)

    @pytest.mark.parametrize("source", ["closed-form", "oracle"])
    def test_multiplication_on_wedge(self, source):
        """J_x and J_y multiply expansions by x and y pointwise"""
        alpha, gamma = 0.7, 0.7
        jx, jy = build_jacobi_operators(alpha, gamma, 4, source=source)
        coeffs = np.zeros(9)
        coeffs[:7] = np.random.default_rng(3).normal(size=7)
        for op, factor in ((jx, "x"), (jy, "y")):
            product = op.apply(coeffs).coeffs
            for x, y in ((XS, np.ones_like(XS)), (np.ones_like(XS), XS)):
                expected = (x if factor == "x" else y) * _wedge_values(alpha, gamma, coeffs, x, y)
                np.testing.assert_allclose(_wedge_values(alpha, gamma, product, x, y), expected, atol=1e-10)

    def test_sources_agree(self):
        """Closed-form and quadrature operators coincide where the closed form validates"""
        closed, _ = build_jacobi_operators(0.0, 0.0, 6, source="closed-form")
        oracle, _ = build_jacobi_operators(0.0, 0.0, 6, source="oracle")
        np.testing.assert_allclose(closed.to_dense(), oracle.to_dense(), atol=1e-10)

    def test_auto_records_provenance(self):
        """auto picks the closed form exactly when it validates"""
        alpha, gamma = 0.3, 1.4
        jx, _ = build_jacobi_operators(alpha, gamma, 4)
        passed = validate_closed_forms(alpha, gamma, 4)["passed"]
        assert jx.provenance == ("closed-form" if passed else "oracle")
        assert build_jacobi_operators(0.0, 0.0, 4)[0].provenance == "closed-form"

    def test_complexify(self):
        """J_z = J_x + i J_y blockwise"""
        jx, jy = build_jacobi_operators(0.5, 0.5, 3)
        jz = jx.complexify(jy)
        np.testing.assert_allclose(jz.to_dense(), jx.to_dense() + 1j * jy.to_dense())

    def test_export_json(self):
        """Exported blocks round through JSON with their provenance"""
        jx, _ = build_jacobi_operators(0.0, 0.0, 2)
        record = json.loads(jx.to_json())
        assert record["provenance"] == "closed-form"
        assert [b["n"] for b in record["blocks"]] == [0, 1, 2]
        assert record["blocks"][0]["C"] == []
        assert len(record["blocks"][1]["A"]) == 2

    def test_invalid_arguments(self):
        """Unknown sources and empty truncations are rejected"""
        with pytest.raises(ValueError):
            build_jacobi_operators(0, 0, 3, source="guess")
        with pytest.raises(ValueError):
            build_jacobi_operators(0, 0, 0)

    def test_block_shapes_checked(self):
        """Mismatched blocks are rejected"""
        with pytest.raises(ValueError):
            BlockTriDiag([np.zeros((1, 0))], [np.zeros((2, 2))], [np.zeros((1, 2))])
