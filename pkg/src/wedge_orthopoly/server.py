import asyncio
import json
import logging
import sys

from mcp.server import Server
from mcp.server.stdio import stdio_server
from mcp.types import TextContent, Tool

from wedge_orthopoly.config import load_config
from wedge_orthopoly.tools.basis_eval import evaluate_basis
from wedge_orthopoly.tools.dpp_experiment import run_dpp_experiment
from wedge_orthopoly.tools.expansion import expand_function
from wedge_orthopoly.tools.operator_export import export_operators
from wedge_orthopoly.tools.stieltjes_grid import stieltjes_grid

logger = logging.getLogger(__name__)

app = Server("wedge-orthopoly")

_PARAMS = {
    "alpha": {"type": "number", "default": 0.0, "description": "Exponent at t = 0 (> -1)"},
    "gamma": {"type": "number", "default": 0.0, "description": "Exponent at t = 1, the corner (> -1)"},
}

_POINT_LIST = {
    "type": "array",
    "items": {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2},
}


@app.list_tools()
async def list_tools() -> list[Tool]:
    return [
        Tool(
            name="evaluate_basis",
            description="Evaluate orthogonal polynomials on the wedge, the boundary of the square "
                        "or inside the square, with their squared norms",
            inputSchema={
                "type": "object",
                "properties": {
                    "family": {"type": "string", "enum": ["wedge", "boundary", "interior"]},
                    "indices": {
                        "type": "array",
                        "description": "Wedge: 'P2', 'Q3', 'R1'; boundary: [n, i]; interior: [n, k, i]",
                    },
                    "points": dict(_POINT_LIST, description="Points [x, y] in the family's domain"),
                    **_PARAMS,
                    "beta": {"type": "number", "description": "Right-segment exponent, defaults to alpha"},
                    "sigma": {"type": "number", "default": 1.0, "description": "Right-segment weight factor"},
                },
                "required": ["family", "indices", "points"],
            },
        ),
        Tool(
            name="expand_function",
            description="Expand a builtin or tabulated function in the wedge basis and report "
                        "how the truncation error decays with degree",
            inputSchema={
                "type": "object",
                "properties": {
                    "function": {
                        "type": "string",
                        "enum": ["exp", "linear", "cubic", "kink", "corner", "step"],
                    },
                    "samples_path": {"type": "string", "description": "CSV of segment,t,value rows"},
                    "n_max": {"type": "integer", "default": 10},
                    **_PARAMS,
                    "beta": {"type": "number"},
                    "sigma": {"type": "number", "default": 1.0},
                },
            },
        ),
        Tool(
            name="export_operators",
            description="Block-tridiagonal Jacobi operators for multiplication by x and y (beta = alpha)",
            inputSchema={
                "type": "object",
                "properties": {
                    **_PARAMS,
                    "n_max": {"type": "integer", "default": 10},
                    "source": {"type": "string", "enum": ["auto", "closed-form", "oracle"], "default": "auto"},
                },
            },
        ),
        Tool(
            name="stieltjes_grid",
            description="Stieltjes transforms of the weighted wedge OPs at points of the complex plane",
            inputSchema={
                "type": "object",
                "properties": {
                    "points": dict(_POINT_LIST, description="Points [re, im]"),
                    "grid": {
                        "type": "array",
                        "items": {"type": "number"},
                        "description": "[re_min, re_max, im_min, im_max, nx, ny]",
                    },
                    **_PARAMS,
                    "k_max": {"type": "integer", "default": 10},
                    "mode": {"type": "string", "enum": ["forward", "olver", "olver-miller", "auto"], "default": "auto"},
                    "limit": {"type": "boolean", "default": False},
                },
            },
        ),
        Tool(
            name="run_dpp_experiment",
            description="Sample a determinantal point process on the wedge and compute gap probabilities",
            inputSchema={
                "type": "object",
                "properties": {
                    "model": {"type": "string", "enum": ["op", "coulomb"], "default": "op"},
                    "n": {"type": "integer", "default": 20},
                    "samples": {"type": "integer", "default": 100},
                    "seed": {"type": "integer", "default": 0},
                    "z0": dict(_POINT_LIST, description="Reference points on the wedge"),
                    **_PARAMS,
                    "grid_points": {"type": "integer"},
                },
            },
        ),
    ]


async def _dispatch(name: str, arguments: dict) -> dict:
    config = load_config()

    if name == "evaluate_basis":
        return await evaluate_basis(
            family=arguments["family"],
            indices=arguments["indices"],
            points=arguments["points"],
            alpha=arguments.get("alpha", 0.0),
            beta=arguments.get("beta"),
            gamma=arguments.get("gamma", 0.0),
            sigma=arguments.get("sigma", 1.0),
        )

    if name == "expand_function":
        return await expand_function(
            function=arguments.get("function"),
            n_max=arguments.get("n_max", 10),
            alpha=arguments.get("alpha", 0.0),
            beta=arguments.get("beta"),
            gamma=arguments.get("gamma", 0.0),
            sigma=arguments.get("sigma", 1.0),
            samples_path=arguments.get("samples_path"),
        )

    if name == "export_operators":
        return await export_operators(
            alpha=arguments.get("alpha", 0.0),
            gamma=arguments.get("gamma", 0.0),
            n_max=arguments.get("n_max", 10),
            source=arguments.get("source", "auto"),
        )

    if name == "stieltjes_grid":
        return await stieltjes_grid(
            points=arguments.get("points"),
            grid=arguments.get("grid"),
            alpha=arguments.get("alpha", 0.0),
            gamma=arguments.get("gamma", 0.0),
            k_max=arguments.get("k_max", 10),
            mode=arguments.get("mode", "auto"),
            limit=arguments.get("limit", False),
            config=config,
        )

    if name == "run_dpp_experiment":
        dpp = config["dpp"]
        return await run_dpp_experiment(
            model=arguments.get("model", "op"),
            n=arguments.get("n", dpp["n_points"]),
            samples=arguments.get("samples", 100),
            seed=arguments.get("seed", dpp["seed"]),
            z0=arguments.get("z0", dpp["z0"]),
            alpha=arguments.get("alpha", 0.0),
            gamma=arguments.get("gamma", 0.0),
            grid_points=arguments.get("grid_points", dpp["grid_points"]),
        )

    raise ValueError(f"Unknown tool: {name}")


@app.call_tool()
async def call_tools(name: str, arguments: dict) -> list[TextContent]:
    try:
        result = await _dispatch(name, arguments)
    except ValueError as e:
        if str(e).startswith("Unknown tool"):
            raise
        return [TextContent(type="text", text=f"Error: {str(e)}")]
    except Exception as e:
        logger.exception("tool %s failed", name)
        return [TextContent(type="text", text=f"Error: {str(e)}")]

    return [TextContent(type="text", text=json.dumps(result, indent=2))]


async def main():
    async with stdio_server() as (read_stream, write_stream):
        await app.run(
            read_stream,
            write_stream,
            app.create_initialization_options()
        )


def run():
    # stdout carries the protocol
    logging.basicConfig(stream=sys.stderr, level=logging.INFO)
    asyncio.run(main())


if __name__ == "__main__":
    run()
