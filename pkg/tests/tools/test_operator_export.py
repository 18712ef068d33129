"""Tests for the export_operators tool"""

from fractions import Fraction

import pytest

from wedge_orthopoly.tools.operator_export import exact_parameter, export_operators


class TestExportOperators:

    @pytest.mark.asyncio
    async def test_legendre_closed_form(self):
        """Uniform weights validate and use closed forms"""
        result = await export_operators(0.0, 0.0, n_max=3)
        assert result["provenance"] == "closed-form"
        assert result["validation"]["passed"]
        assert [b["n"] for b in result["jx"]["blocks"]] == [0, 1, 2, 3]
        assert result["jy"]["params"]["beta"] == 0.0

    @pytest.mark.asyncio
    async def test_block_shapes(self):
        """Degree-zero block is 1x1, later blocks 2x2"""
        result = await export_operators(0.7, 0.7, n_max=2)
        blocks = result["jx"]["blocks"]
        assert len(blocks[0]["A"]) == 1 and len(blocks[0]["B"][0]) == 2
        assert len(blocks[2]["A"]) == 2 and len(blocks[2]["C"][0]) == 2

    @pytest.mark.asyncio
    async def test_oracle_source(self):
        """Quadrature rows on request"""
        result = await export_operators(0.3, 1.2, n_max=2, source="oracle")
        assert result["provenance"] == "oracle"

    @pytest.mark.asyncio
    async def test_degree_too_small(self):
        """n_max below one returns an error"""
        result = await export_operators(n_max=0)
        assert "error" in result

    @pytest.mark.asyncio
    async def test_unknown_source(self):
        """Unknown sources raise"""
        with pytest.raises(ValueError):
            await export_operators(source="table")

    @pytest.mark.asyncio
    async def test_rational_entries(self):
        """Float exponents 0 and 1/2 still give exact Fraction strings"""
        result = await export_operators(0.0, 0.0, n_max=2)

        def entries(op):
            return [v for b in result[op]["blocks"] for key in ("A", "B") for line in b[key] for v in line]

        assert result["provenance"] == "closed-form"
        assert "-1/2" in entries("jx")
        assert "1/2" in entries("jy")
        half = await export_operators(0.5, 0.5, n_max=2)
        assert any(isinstance(v, str) and "/" in v for b in half["jy"]["blocks"] for line in b["B"] for v in line)

    @pytest.mark.asyncio
    async def test_irrational_exponent_stays_float(self):
        """Exponents without a short rational form export floats"""
        result = await export_operators(2**0.5 - 1, 0.0, n_max=2)
        assert all(isinstance(v, float) for b in result["jx"]["blocks"] for line in b["A"] for v in line)

    def test_exact_parameter(self):
        """0.25 becomes 1/4 and sqrt(2) stays a float"""
        assert exact_parameter(0.25) == Fraction(1, 4)
        assert exact_parameter(1.5) == Fraction(3, 2)
        assert isinstance(exact_parameter(2**0.5), float)
