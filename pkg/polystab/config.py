from __future__ import annotations

import copy
import os
from pathlib import Path
from typing import Any, Optional

import yaml

from .core.errors import ValidationError

PACKAGE_DIR = Path(__file__).resolve().parent
DEFAULT_CONFIG_FILE = PACKAGE_DIR / "configs" / "defaults.yml"


def getenv(key: str, default: Optional[str] = None, *aliases: str) -> Optional[str]:
    """Return first non-empty env var among key and aliases."""

    for k in (key, *aliases):
        v = os.getenv(k)
        if v not in (None, ""):
            return v
    return default


def getenv_bool(key: str, default: bool = False) -> bool:
    v = os.getenv(key)
    if v is None:
        return default
    return str(v).strip().lower() in {"1", "true", "yes", "on"}


def config_file_path(explicit: Optional[str] = None) -> Path:
    """--config-file wins, then POLYSTAB_CONFIG, then the packaged defaults."""

    chosen = explicit or getenv("POLYSTAB_CONFIG")
    return Path(chosen) if chosen else DEFAULT_CONFIG_FILE


def load_defaults(path: Optional[str | Path] = None) -> dict[str, Any]:
    """Load the ``default:`` block of a YAML defaults file."""

    config_file = Path(path) if path is not None else config_file_path()
    if not config_file.is_file():
        raise ValidationError(f"Config file not found: {config_file}", context={"path": str(config_file)})
    with open(config_file, "r") as f:
        document = yaml.safe_load(f) or {}
    if "default" not in document:
        raise ValidationError(f"Config file {config_file} has no 'default' block", context={"path": str(config_file)})
    return document["default"]


def merge_overrides(base: dict[str, Any], overrides: dict[str, Any]) -> dict[str, Any]:
    """Deep-merge ``overrides`` into a copy of ``base``; ``None`` values are ignored."""

    merged = copy.deepcopy(base)
    for key, value in overrides.items():
        if value is None:
            continue
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = merge_overrides(merged[key], value)
        else:
            merged[key] = value
    return merged


def output_dir() -> Optional[Path]:
    v = getenv("POLYSTAB_OUTPUT_DIR")
    return Path(v) if v else None
