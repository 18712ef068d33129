"""Command-line front end: eval, expand, operators, stieltjes, dpp

Exit codes: 0 success, 2 usage, 3 numerical failure.
"""

import argparse
import asyncio
import csv
import json
import logging
import sys
from pathlib import Path
from typing import Optional

from wedge_orthopoly.config import get_setting, load_config
from wedge_orthopoly.dpp.basis import DiscretizationError
from wedge_orthopoly.dpp.sampler import SamplingError
from wedge_orthopoly.stieltjes.recurrence import ConditioningError, ConvergenceError
from wedge_orthopoly.stieltjes.transform import ContourError
from wedge_orthopoly.tools.basis_eval import evaluate_basis
from wedge_orthopoly.tools.dpp_experiment import run_dpp_experiment
from wedge_orthopoly.tools.expansion import expand_function
from wedge_orthopoly.tools.operator_export import export_operators
from wedge_orthopoly.tools.stieltjes_grid import stieltjes_grid
from wedge_orthopoly.univariate.orthopoly import OrthogonalizationError
from wedge_orthopoly.univariate.quadrature import QuadratureError

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_USAGE, EXIT_NUMERICAL = 0, 2, 3
DEFAULT_DEGREE = 10

NUMERICAL_ERRORS = (
    ConditioningError,
    ContourError,
    ConvergenceError,
    DiscretizationError,
    OrthogonalizationError,
    QuadratureError,
    SamplingError,
)

STIELTJES_COLUMNS = ["re_z", "im_z", "k", "label", "re_S", "im_S", "mode", "est_error", "error"]
SAMPLE_COLUMNS = ["sample_id", "segment", "t", "x", "y"]
GAP_COLUMNS = ["scaled_distance", "complement_ecdf", "n_samples", "n_infinite"]


class UsageError(Exception):
    """Arguments parse but do not describe a valid run"""
    pass


def _format(value, digits: int) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.{digits}g}"
    return str(value)


def write_csv(path: Path, columns: list[str], rows: list[dict], digits: int = 17) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_format(row.get(c), digits) for c in columns])
    logger.info("wrote %d rows to %s", len(rows), path)


def write_json(path: Path, payload: dict) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(payload, f, indent=2)
    logger.info("wrote %s", path)


def _parse_point(text: str) -> list[float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"Expected x,y: {text}")
    try:
        return [float(parts[0]), float(parts[1])]
    except ValueError:
        raise UsageError(f"Expected numbers in x,y: {text}")


def _parse_numbers(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"Expected a comma-separated list of numbers: {text}")


def _eval_points(args) -> list[list[float]]:
    if args.points:
        return [_parse_point(p) for p in args.points]
    if not args.grid:
        raise UsageError("eval needs --grid or --point")
    ts = _parse_numbers(args.grid)
    if args.segment == "top":
        return [[t, 1.0] for t in ts]
    return [[1.0, t] for t in ts]


def cmd_eval(args, config: dict) -> dict:
    result = asyncio.run(evaluate_basis(
        family=args.family,
        indices=args.index,
        points=_eval_points(args),
        alpha=args.alpha,
        beta=args.beta,
        gamma=args.gamma,
        sigma=args.sigma,
    ))
    if "error" in result:
        raise UsageError(result["error"])

    out = Path(args.out)
    if args.format == "json":
        write_json(out / "eval.json", result)
        return result

    columns = ["x", "y"] + [v["index"] for v in result["values"]]
    rows = [
        dict({"x": x, "y": y}, **{v["index"]: v["values"][j] for v in result["values"]})
        for j, (x, y) in enumerate(result["points"])
    ]
    write_csv(out / "values.csv", columns, rows, args.digits)
    write_json(out / "norms.json", {
        "family": result["family"],
        "params": result["params"],
        "norms": {v["index"]: v["norm"] for v in result["values"]},
    })
    return result


def cmd_expand(args, config: dict) -> dict:
    if not args.function and not args.samples_file:
        raise UsageError("expand needs --function or --samples-file")
    result = asyncio.run(expand_function(
        function=args.function,
        n_max=args.nmax,
        alpha=args.alpha,
        beta=args.beta,
        gamma=args.gamma,
        sigma=args.sigma,
        samples_path=args.samples_file,
    ))
    if "error" in result:
        raise UsageError(result["error"])

    out = Path(args.out)
    if args.format == "json":
        write_json(out / "expand.json", result)
        return result

    record = result["expansion"]
    write_csv(
        out / "coefficients.csv",
        ["family", "coefficient", "norm"],
        [{"family": f, "coefficient": c, "norm": h}
         for f, c, h in zip(record["families"], record["coefficients"], record["norms"])],
        args.digits,
    )
    columns = list(result["convergence"][0])
    write_csv(out / "convergence.csv", columns, result["convergence"], args.digits)
    return result


def cmd_operators(args, config: dict) -> dict:
    result = asyncio.run(export_operators(args.alpha, args.gamma, args.nmax, args.source))
    if "error" in result:
        raise UsageError(result["error"])
    write_json(Path(args.out) / "operators.json", result)
    return result


def _z_points(args) -> tuple[Optional[list], Optional[list]]:
    if args.z:
        return [_parse_point(z) for z in args.z], None
    if not args.grid:
        raise UsageError("stieltjes needs --z or --grid re_min,re_max,im_min,im_max,nx,ny")
    grid = _parse_numbers(args.grid)
    if len(grid) != 6 or grid[4] < 1 or grid[5] < 1:
        raise UsageError(f"Grid needs re_min,re_max,im_min,im_max,nx,ny: {args.grid}")
    return None, grid


def cmd_stieltjes(args, config: dict) -> dict:
    points, grid = _z_points(args)
    result = asyncio.run(stieltjes_grid(
        points=points,
        grid=grid,
        alpha=args.alpha,
        gamma=args.gamma,
        k_max=args.nmax,
        mode=args.mode,
        limit=args.limit,
        config=config,
    ))

    out = Path(args.out)
    if args.format == "json":
        write_json(out / "stieltjes.json", result)
    else:
        write_csv(out / "stieltjes.csv", STIELTJES_COLUMNS, result["rows"], args.digits)
    return result


def cmd_dpp(args, config: dict) -> dict:
    z0 = [_parse_point(p) for p in args.z0] if args.z0 else get_setting(config, "dpp.z0")
    result = asyncio.run(run_dpp_experiment(
        model=args.model,
        n=args.nmax,
        samples=args.samples,
        seed=args.seed,
        z0=z0,
        alpha=args.alpha,
        gamma=args.gamma,
        grid_points=int(args.grid) if args.grid else get_setting(config, "dpp.grid_points"),
        include_samples=True,
    ))
    if "error" in result:
        raise UsageError(result["error"])

    out = Path(args.out)
    if args.format == "json":
        write_json(out / f"dpp_{args.model}.json", result)
        return result

    write_csv(out / f"samples_{args.model}.csv", SAMPLE_COLUMNS, result["samples"], args.digits)
    for gap in result["gaps"]:
        x, y = gap["z0"]
        write_csv(out / f"gaps_{args.model}_{x:g}_{y:g}.csv", GAP_COLUMNS, gap["curve"], args.digits)
    write_json(out / f"summary_{args.model}.json", result["summary"])
    return result


COMMANDS = {
    "eval": cmd_eval,
    "expand": cmd_expand,
    "operators": cmd_operators,
    "stieltjes": cmd_stieltjes,
    "dpp": cmd_dpp,
}


def build_parser(config: dict) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", type=float, default=0.0)
    common.add_argument("--beta", type=float, default=None, help="defaults to alpha")
    common.add_argument("--gamma", type=float, default=0.0)
    common.add_argument("--sigma", type=float, default=1.0)
    common.add_argument("--nmax", type=int, default=None, help="degree (default 10), or points per sample for dpp")
    common.add_argument("--grid", default=None, help="t list (eval), re_min,re_max,im_min,im_max,nx,ny (stieltjes), points per segment (dpp)")
    common.add_argument("--out", default=".")
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="wedge-orthopoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate basis elements")
    p.add_argument("--family", choices=["wedge", "boundary", "interior"], required=True)
    p.add_argument("--index", action="append", required=True, help="P3, Q2 | n,i | n,k,i")
    p.add_argument("--segment", choices=["top", "right"], default="top")
    p.add_argument("--point", dest="points", action="append")

    p = sub.add_parser("expand", parents=[common], help="expansion coefficients and errors")
    p.add_argument("--function")
    p.add_argument("--samples-file")

    p = sub.add_parser("operators", parents=[common], help="export J_x and J_y")
    p.add_argument("--source", choices=["auto", "closed-form", "oracle"], default="auto")

    p = sub.add_parser("stieltjes", parents=[common], help="Stieltjes transforms on a z grid")
    p.add_argument("--z", action="append", help="re,im")
    p.add_argument("--mode", choices=["forward", "olver", "olver-miller", "auto"], default="auto")
    p.add_argument("--limit", action="store_true", help="boundary values for points on the wedge")

    p = sub.add_parser("dpp", parents=[common], help="DPP samples and gap curves")
    p.add_argument("--model", choices=["op", "coulomb"], default="op")
    p.add_argument("--samples", type=int, default=get_setting(config, "dpp.samples"))
    p.add_argument("--seed", type=int, default=get_setting(config, "dpp.seed"))
    p.add_argument("--z0", action="append", help="x,y on the wedge")

    return parser


def _check_domain(args) -> None:
    for name in ("alpha", "beta", "gamma"):
        value = getattr(args, name)
        if value is not None and not value > -1:
            raise UsageError(f"--{name} must exceed -1: {value}")
    if not args.sigma > 0:
        raise UsageError(f"--sigma must be positive: {args.sigma}")
    if args.command == "dpp" and (args.nmax < 1 or args.samples < 1):
        raise UsageError("--nmax and --samples must be >= 1")


def main(argv: Optional[list[str]] = None) -> int:
    config = load_config()
    parser = build_parser(config)
    args = parser.parse_args(argv)
    args.digits = get_setting(config, "output.float_digits")
    if args.nmax is None:
        args.nmax = get_setting(config, "dpp.n_points") if args.command == "dpp" else DEFAULT_DEGREE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        _check_domain(args)
        Path(args.out).mkdir(parents=True, exist_ok=True)
        COMMANDS[args.command](args, config)
    except (UsageError, IndexError, ValueError, FileNotFoundError) as e:
        parser.print_usage(sys.stderr)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except NUMERICAL_ERRORS as e:
        print(f"numerical failure: {e}", file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
