"""
Configuration loading

Precedence, highest first: CLI flags > environment variables > YAML file >
built-in defaults. Environment variables use `DLENS_<SECTION>_<KEY>`
(e.g. DLENS_CLASSIFIER_ABSOLUTE_THRESHOLD) plus a few shorthands.
"""

import copy
import os
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

import dotenv
import yaml
from loguru import logger

from ..errors import ConfigError

PROJECT_DIR = Path(__file__).parent.parent.parent
DEFAULT_CONFIG_PATH = PROJECT_DIR / "config/dlens_config.yaml"

ENV_PREFIX = "DLENS_"

DEFAULT_CONFIG: Dict[str, Any] = {
    "classifier": {
        "absolute_threshold": 3,
        "ratio_threshold": 0.27,
        "absolute_grid": list(range(0, 11)),
        "ratio_grid": [round(i / 100, 2) for i in range(1, 51)],
    },
    "ngram": {
        "order": 5,
        "k": 0.01,
        "beta": 1.0,
        "min_count": 2,
    },
    "ccd": {
        "r1_weight": 3,
        "r1_min_depth": 3,
        "r2_weight": 3,
        "r3_threshold": 120,
        "r3_mode": "floor",
        "r3_fixed": 1,
        "r4_weight": 4,
        "r5_weight": 4,
        "r6_weight": 1,
    },
    "patterns": {
        "p1_min_depth": 3,
    },
    "general": {
        "num_workers": 4,
        "progress": True,
        "logging": {
            "level": "INFO",
            "log_dir": None,
        },
    },
}

# Shorthand variable -> (section, key)
ENV_SHORTHANDS = {
    "DLENS_T_ABSOLUTE": ("classifier", "absolute_threshold"),
    "DLENS_T_RATIO": ("classifier", "ratio_threshold"),
    "DLENS_ORDER": ("ngram", "order"),
    "DLENS_R3_THRESHOLD": ("ccd", "r3_threshold"),
    "DLENS_WORKERS": ("general", "num_workers"),
    "DLENS_LOG_LEVEL": ("general", "logging.level"),
}

# Keys that accept any real number even where the default is an int
REAL_VALUED = {
    ("classifier", "absolute_threshold"),
    ("classifier", "ratio_threshold"),
}


def deep_merge(base: Dict[str, Any], override: Mapping[str, Any]) -> Dict[str, Any]:
    """Recursively merge `override` into a copy of `base`"""
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, Mapping) and isinstance(merged.get(key), dict):
            merged[key] = deep_merge(merged[key], value)
        else:
            merged[key] = copy.deepcopy(value)
    return merged


def _coerce(raw: str, current: Any, name: str, real: bool = False) -> Any:
    """
    Convert an environment string to the type of the value it replaces

    `real` lets an integer default take a fractional value.
    """
    try:
        if isinstance(current, bool):
            lowered = raw.strip().lower()
            if lowered not in ("1", "0", "true", "false", "yes", "no"):
                raise ValueError(raw)
            return lowered in ("1", "true", "yes")
        if isinstance(current, int):
            try:
                return int(raw)
            except ValueError:
                if not real:
                    raise
                return float(raw)
        if isinstance(current, float):
            return float(raw)
        if isinstance(current, list):
            return [float(item) if "." in item else int(item) for item in raw.split(",") if item.strip()]
    except ValueError as e:
        raise ConfigError(f"environment variable {name}={raw!r} is not a valid {type(current).__name__}") from e
    return raw


def _set_path(config: Dict[str, Any], section: str, dotted_key: str, raw: str, name: str) -> None:
    target = config.setdefault(section, {})
    parts = dotted_key.split(".")
    for part in parts[:-1]:
        target = target.setdefault(part, {})
    real = (section, dotted_key) in REAL_VALUED
    target[parts[-1]] = _coerce(raw, target.get(parts[-1]), name, real)


def apply_env_overrides(config: Dict[str, Any], environ: Optional[Mapping[str, str]] = None) -> Dict[str, Any]:
    """Overlay DLENS_* variables onto `config` (returns a new dict)"""
    environ = os.environ if environ is None else environ
    result = copy.deepcopy(config)

    for section, values in DEFAULT_CONFIG.items():
        for key in values:
            if isinstance(values[key], dict):
                continue
            name = f"{ENV_PREFIX}{section}_{key}".upper()
            if name in environ:
                _set_path(result, section, key, environ[name], name)

    # Shorthands are applied last and win over the long form
    for name, (section, key) in ENV_SHORTHANDS.items():
        if name in environ:
            _set_path(result, section, key, environ[name], name)
    return result


def load_yaml(config_path: Optional[str]) -> Dict[str, Any]:
    """Load a YAML configuration file; a missing default file yields {}"""
    if config_path is None:
        if not DEFAULT_CONFIG_PATH.exists():
            return {}
        config_path = str(DEFAULT_CONFIG_PATH)
    try:
        with open(config_path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except FileNotFoundError as e:
        raise ConfigError(f"configuration file not found: {config_path}") from e
    except yaml.YAMLError as e:
        raise ConfigError(f"configuration file format error: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError(f"configuration file {config_path} must hold a mapping")
    logger.debug(f"Loaded configuration from {config_path}")
    return data


def load_config(
    config_path: Optional[str] = None,
    environ: Optional[Mapping[str, str]] = None,
    overrides: Optional[Mapping[str, Any]] = None,
    load_dotenv: bool = True,
) -> Dict[str, Any]:
    """
    Resolve the effective configuration

    Args:
        config_path: YAML file; None uses config/dlens_config.yaml when present
        environ: Environment mapping (defaults to os.environ)
        overrides: Values from CLI flags, same nesting as the YAML file
        load_dotenv: Read `.env` from the working directory first

    Returns:
        Fully merged configuration dictionary
    """
    if load_dotenv and environ is None:
        dotenv.load_dotenv(dotenv.find_dotenv(usecwd=True))
    config = deep_merge(DEFAULT_CONFIG, load_yaml(config_path))
    config = apply_env_overrides(config, environ)
    if overrides:
        config = deep_merge(config, overrides)
    return config
