"""Table, CSV and JSON emission with the run configuration embedded.

JSON documents are canonical (sorted keys, rationals as "p/q" strings) and carry
a SHA-256 digest of their schema, config and payload, so identical runs give
byte-identical output.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Sequence

import pandas as pd

from ..config import output_dir
from ..core.enums import OutputFormat
from ..core.errors import ValidationError
from ..exact.rational import format_rational
from ..logging import get_logger

logger = get_logger(__name__)

SCHEMA_VERSION = "v1"

COLUMNS: dict[str, tuple[str, ...]] = {
    "spectrum": ("j", "lambda", "multiplicity"),
    "tension": ("m", "t", "sigma", "K", "tau4", "tau4_closed_form", "omega0", "omega1_trace", "xi1", "tau_hat4", "es4", "energy_density", "proper_t"),
    "form": ("energy", "source", "norms", "m", "t", "K", "degree", "coefficient"),
    "index": ("energy", "m", "source", "index", "nullity", "negative_j", "zero_j", "cutoff"),
    "compare": ("m", "quantity", "degree", "printed", "general", "small_sphere_composition", "small_sphere_printed", "composition", "match", "known"),
    "oracle": ("quantity", "label", "route", "value", "reference", "error", "pass"),
    "verify": ("suite", "check", "passed", "detail"),
}


def schema_name(kind: str) -> str:
    return f"polystab.{kind}.{SCHEMA_VERSION}"


def _default(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, Path):
        return str(obj)
    if isinstance(obj, (set, frozenset, tuple)):
        return list(obj)
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    if hasattr(obj, "item"):  # numpy scalars
        return obj.item()
    raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable")


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False, default=_default)


def content_digest(obj: Any) -> str:
    return hashlib.sha256(canonical_json(obj).encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class RunConfig:
    """What was asked for, validated before anything runs."""

    command: str
    output_format: OutputFormat = OutputFormat.TABLE
    params: dict[str, Any] = field(default_factory=dict)
    out: Optional[str] = None

    def __post_init__(self) -> None:
        if self.command not in ("spectrum", "tension", "form", "index", "verify", "oracle"):
            raise ValidationError(f"Unknown command '{self.command}'", context={"command": self.command})
        object.__setattr__(self, "output_format", OutputFormat(self.output_format))
        try:
            canonical_json(self.params)
        except TypeError as exc:
            raise ValidationError("Run parameters must be serializable", context={"error": str(exc)}) from exc

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "format": self.output_format.value,
            "params": json.loads(canonical_json(self.params)),
            "out": self.out,
        }


def build_document(kind: str, config: RunConfig, payload: Any) -> dict[str, Any]:
    body = {"schema": schema_name(kind), "config": config.to_dict(), "payload": json.loads(canonical_json(payload))}
    return {**body, "digest": content_digest(body)}


def render(kind: str, config: RunConfig, payload: Any, rows: Sequence[dict[str, Any]]) -> str:
    if kind not in COLUMNS:
        raise ValidationError(f"Unknown emission kind '{kind}'", context={"kinds": sorted(COLUMNS)})
    fmt = config.output_format
    if fmt == OutputFormat.JSON:
        return json.dumps(build_document(kind, config, payload), indent=2, sort_keys=True, ensure_ascii=False, default=_default) + "\n"

    frame = pd.DataFrame([{k: _cell(row.get(k)) for k in COLUMNS[kind]} for row in rows], columns=list(COLUMNS[kind]))
    if fmt == OutputFormat.CSV:
        return frame.to_csv(index=False)
    if frame.empty:
        return "  ".join(COLUMNS[kind]) + "\n"
    return frame.to_string(index=False) + "\n"


def _cell(value: Any) -> Any:
    if value is None:
        return ""
    if isinstance(value, (Fraction, Enum, Path)):
        return _default(value)
    return value


def destination(kind: str, config: RunConfig) -> Optional[Path]:
    """--out, else POLYSTAB_OUTPUT_DIR/<kind>.<ext>, else stdout (None)."""

    if config.out:
        return Path(config.out)
    directory = output_dir()
    if directory is None:
        return None
    ext = {OutputFormat.JSON: "json", OutputFormat.CSV: "csv", OutputFormat.TABLE: "txt"}[config.output_format]
    return directory / f"{kind}.{ext}"


def emit(kind: str, config: RunConfig, payload: Any, rows: Sequence[dict[str, Any]]) -> str:
    text = render(kind, config, payload, rows)
    path = destination(kind, config)
    if path is None:
        print(text, end="")
    else:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.info("Wrote %s emission to %s", kind, path)
    return text
