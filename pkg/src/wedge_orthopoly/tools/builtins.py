"""Builtin test functions on the wedge and tabulated sample files"""

import csv
import logging
from pathlib import Path
from typing import Callable

import numpy as np

from wedge_orthopoly.wedge.geometry import Segment, WedgeFunction

logger = logging.getLogger(__name__)


class SampleFileError(ValueError):
    """Malformed tabulated samples; message carries the line number"""
    pass


def _exp() -> WedgeFunction:
    return WedgeFunction.from_xy(lambda x, y: np.exp(x + y))


def _linear() -> WedgeFunction:
    return WedgeFunction.from_xy(lambda x, y: x)


def _cubic() -> WedgeFunction:
    return WedgeFunction.from_xy(lambda x, y: x**3 - 2 * y**3 + x * y - 0.5)


def _kink() -> WedgeFunction:
    return WedgeFunction(lambda x: np.abs(x - 0.5), lambda y: np.full_like(y, 0.5))


def _corner() -> WedgeFunction:
    return WedgeFunction(lambda x: np.sqrt(np.abs(1 - x)), lambda y: np.zeros_like(y))


def _step() -> WedgeFunction:
    return WedgeFunction(lambda x: np.where(x > 0.5, 1.0, 0.0), lambda y: np.ones_like(y))


BUILTINS: dict[str, Callable[[], WedgeFunction]] = {
    "exp": _exp,
    "linear": _linear,
    "cubic": _cubic,
    "kink": _kink,
    "corner": _corner,
    "step": _step,
}


def get_builtin(name: str) -> WedgeFunction:
    if name not in BUILTINS:
        raise ValueError(f"Unknown function: {name} (choose from {', '.join(sorted(BUILTINS))})")
    return BUILTINS[name]()


def load_samples(path: str) -> WedgeFunction:
    """Read rows 'segment,t,value' and interpolate each segment linearly

    Both segments must tabulate t = 1 with matching corner values.
    """
    file_path = Path(path)
    if not file_path.exists():
        raise FileNotFoundError(f"Samples file not found: {path}")

    columns = {Segment.TOP: [], Segment.RIGHT: []}
    with open(file_path, "r", encoding="utf-8", newline="") as f:
        for line_no, row in enumerate(csv.reader(f), start=1):
            if not row or row[0].startswith("#") or (line_no == 1 and row[0] == "segment"):
                continue
            if len(row) != 3:
                raise SampleFileError(f"Line {line_no}: expected segment,t,value")
            try:
                segment = Segment(row[0].strip().lower())
                t, value = float(row[1]), float(row[2])
            except ValueError as e:
                raise SampleFileError(f"Line {line_no}: {e}")
            if not 0.0 <= t <= 1.0:
                raise SampleFileError(f"Line {line_no}: t={t} outside [0,1]")
            columns[segment].append((t, value))

    tables = {}
    for segment, pairs in columns.items():
        if len(pairs) < 2:
            raise SampleFileError(f"Segment {segment.value} needs at least two samples")
        pairs.sort()
        tables[segment] = (np.array([p[0] for p in pairs]), np.array([p[1] for p in pairs]))

    logger.debug("loaded %d samples from %s", sum(len(v) for v in columns.values()), path)
    (t1, v1), (t2, v2) = tables[Segment.TOP], tables[Segment.RIGHT]
    # WedgeFunction rejects mismatched corners
    return WedgeFunction(lambda x: np.interp(x, t1, v1), lambda y: np.interp(y, t2, v2))
