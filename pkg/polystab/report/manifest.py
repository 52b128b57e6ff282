"""Checked-in list of published values that disagree with the derived routes.

A mismatch listed here is a finding, not a failure: ``verify`` reports it and
still exits 0. Entries carry both m-polynomials, so an edited transcription
no longer matches and fails the run.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

from ..config import PACKAGE_DIR
from ..core.enums import Energy
from ..core.errors import ValidationError
from ..exact.poly import eval_univariate
from ..exact.rational import to_rational
from ..forms.compare import ROUTE_COMPOSITION, ROUTE_GENERAL, ROUTE_PRINTED, CoefficientRow, ComparisonReport, DisplayCheck

MANIFEST_FILE = PACKAGE_DIR / "data" / "known_discrepancies.json"
MANIFEST_SCHEMA = "polystab.known-discrepancies.v1"


def _poly(values: list[Any]) -> tuple[Fraction, ...]:
    return tuple(to_rational(v) for v in values)


def _trimmed(p: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    end = len(p)
    while end and p[end - 1] == 0:
        end -= 1
    return tuple(p[:end])


@dataclass(frozen=True)
class KnownCoefficient:
    quantity: str
    degree: int
    printed: tuple[Fraction, ...]
    derived: tuple[Fraction, ...]
    note: str = ""

    def covers(self, row: CoefficientRow, m: int) -> bool:
        if (row.quantity, row.degree) != (self.quantity, self.degree):
            return False
        derived = row.values.get(ROUTE_GENERAL, row.values.get(ROUTE_COMPOSITION))
        return row.values.get(ROUTE_PRINTED) == eval_univariate(self.printed, m) and derived == eval_univariate(
            self.derived, m
        )


@dataclass(frozen=True)
class KnownDisplay:
    energy: Energy
    displayed: tuple[Fraction, ...]
    exact: tuple[Fraction, ...]
    note: str = ""

    def covers(self, check: DisplayCheck) -> bool:
        return (
            check.energy == self.energy
            and _trimmed(check.displayed) == _trimmed(self.displayed)
            and _trimmed(check.exact) == _trimmed(self.exact)
        )


@dataclass(frozen=True)
class KnownDiscrepancies:
    adjudicated: str
    coefficients: tuple[KnownCoefficient, ...]
    displays: tuple[KnownDisplay, ...]

    def unlisted_rows(self, report: ComparisonReport) -> list[CoefficientRow]:
        return [
            row for row in report.mismatches if not any(entry.covers(row, report.m) for entry in self.coefficients)
        ]

    def unlisted_displays(self, report: ComparisonReport) -> list[DisplayCheck]:
        return [
            check
            for check in report.display_checks
            if not check.match and not any(entry.covers(check) for entry in self.displays)
        ]

    def to_dict(self) -> dict[str, Any]:
        return {
            "adjudicated": self.adjudicated,
            "coefficients": [
                {"quantity": c.quantity, "degree": c.degree, "note": c.note} for c in self.coefficients
            ],
            "displays": [{"energy": d.energy.value, "note": d.note} for d in self.displays],
        }


def load_manifest(path: Optional[str | Path] = None) -> KnownDiscrepancies:
    manifest_file = Path(path) if path is not None else MANIFEST_FILE
    if not manifest_file.is_file():
        raise ValidationError(f"Manifest not found: {manifest_file}", context={"path": str(manifest_file)})
    with open(manifest_file, "r", encoding="utf-8") as f:
        document = json.load(f)
    if document.get("schema") != MANIFEST_SCHEMA:
        raise ValidationError(
            "Unsupported known-discrepancy manifest",
            context={"path": str(manifest_file), "schema": document.get("schema")},
        )
    return KnownDiscrepancies(
        adjudicated=document.get("adjudicated", ""),
        coefficients=tuple(
            KnownCoefficient(e["quantity"], int(e["degree"]), _poly(e["printed"]), _poly(e["derived"]), e.get("note", ""))
            for e in document.get("coefficients", [])
        ),
        displays=tuple(
            KnownDisplay(Energy(e["energy"]), _poly(e["displayed"]), _poly(e["exact"]), e.get("note", ""))
            for e in document.get("displays", [])
        ),
    )
