"""Tests for the MCP server wiring"""

import json

import pytest

from wedge_orthopoly.server import call_tools, list_tools


class TestServer:

    @pytest.mark.asyncio
    async def test_lists_every_tool(self):
        """All five tools are advertised"""
        names = {tool.name for tool in await list_tools()}
        assert names == {"evaluate_basis", "expand_function", "export_operators", "stieltjes_grid", "run_dpp_experiment"}

    @pytest.mark.asyncio
    async def test_call_returns_json(self):
        """Results come back as indented JSON text"""
        content = await call_tools("evaluate_basis", {"family": "wedge", "indices": ["P1"], "points": [[0.0, 1.0]]})
        result = json.loads(content[0].text)
        assert result["values"][0]["values"] == pytest.approx([-1.0])

    @pytest.mark.asyncio
    async def test_call_error_as_text(self):
        """Failures are reported as an Error line"""
        content = await call_tools("evaluate_basis", {"family": "wedge", "indices": ["S1"], "points": [[0.0, 1.0]]})
        assert content[0].text.startswith("Error:")

    @pytest.mark.asyncio
    async def test_unknown_tool(self):
        """Unknown tool names propagate"""
        with pytest.raises(ValueError):
            await call_tools("nope", {})
