"""Numeric defaults loaded from config.json"""

import copy
import json
import logging
import os
import re
from pathlib import Path
from typing import Any, Optional

logger = logging.getLogger(__name__)

CONFIG_FILE = Path(__file__).resolve().parents[2] / "config.json"

DEFAULTS = {
    "stieltjes": {
        "rtol": 1e-12,
        "n_cap": 4000,
        "auto_threshold": 0.1,
    },
    "dpp": {
        "grid_points": 2048,
        "n_points": 20,
        "samples": 2000,
        "seed": 0,
        "z0": [[1.0, 1.0], [0.0, 1.0], [0.5, 1.0], [0.7, 1.0]],
    },
    "output": {
        "float_digits": 17,
    },
}

# ${VAR:-default}
_PLACEHOLDER = re.compile(r"^\$\{(\w+)(?::-(.*))?\}$")


def _expand(value: Any) -> Any:
    """Resolve env placeholders in string values"""
    if isinstance(value, dict):
        return {k: _expand(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_expand(v) for v in value]
    if not isinstance(value, str):
        return value

    match = _PLACEHOLDER.match(value)
    if not match:
        return value

    raw = os.environ.get(match.group(1), match.group(2) or "")
    try:
        return json.loads(raw)
    except json.JSONDecodeError:
        return raw


def _merge(base: dict, override: dict) -> dict:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(path: Optional[str] = None) -> dict:
    """Load config.json merged over built-in defaults"""
    file_path = Path(path) if path else CONFIG_FILE
    if not file_path.exists():
        if path:
            raise FileNotFoundError(f"Config not found: {path}")
        logger.debug("no config file, using defaults")
        return copy.deepcopy(DEFAULTS)

    with open(file_path, "r", encoding="utf-8") as f:
        try:
            raw = json.load(f)
        except json.JSONDecodeError as e:
            raise ValueError(f"Invalid config JSON: {e}")

    return _merge(DEFAULTS, _expand(raw))


def get_setting(config: dict, key: str) -> Any:
    """Read a dotted key such as 'stieltjes.rtol'"""
    node = config
    for part in key.split("."):
        if not isinstance(node, dict) or part not in node:
            raise KeyError(f"Unknown setting: {key}")
        node = node[part]
    return node
