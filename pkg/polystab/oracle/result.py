from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

from ..core.enums import OracleQuantity

PRINTED_ROUTE = "printed"


@dataclass(frozen=True)
class OracleResult:
    """Numeric values against exact references, one reference table per route.

    A route is supported when every value it has a reference for satisfies
    |value - ref| <= rtol·|ref| + atol. Raw numbers are always kept.
    """

    quantity: OracleQuantity
    values: dict[str, float]
    references: dict[str, dict[str, float]]
    rtol: float
    atol: float = 0.0
    metadata: dict[str, Any] = field(default_factory=dict)

    def errors(self) -> dict[str, dict[str, float]]:
        """Relative errors; absolute where the reference is zero."""

        out: dict[str, dict[str, float]] = {}
        for route, refs in self.references.items():
            out[route] = {}
            for label, ref in refs.items():
                diff = abs(self.values[label] - ref)
                out[route][label] = diff / abs(ref) if ref != 0 else diff
        return out

    @property
    def verdicts(self) -> dict[str, bool]:
        return {
            route: all(
                math.isfinite(self.values[label]) and abs(self.values[label] - ref) <= self.rtol * abs(ref) + self.atol
                for label, ref in refs.items()
            )
            for route, refs in self.references.items()
        }

    def supports(self, route: str) -> bool:
        return self.verdicts.get(route, False)

    def supports_derived(self) -> bool:
        derived = {r: ok for r, ok in self.verdicts.items() if r != PRINTED_ROUTE}
        return bool(derived) and all(derived.values())

    def to_dict(self) -> dict[str, Any]:
        return {
            "quantity": self.quantity.value,
            "values": dict(self.values),
            "references": {r: dict(v) for r, v in self.references.items()},
            "errors": self.errors(),
            "verdicts": self.verdicts,
            "tolerances": {"rtol": self.rtol, "atol": self.atol},
            "metadata": dict(self.metadata),
        }

    def to_rows(self) -> list[dict[str, Any]]:
        errors = self.errors()
        rows = []
        for route, refs in self.references.items():
            for label, ref in refs.items():
                rows.append(
                    {
                        "quantity": self.quantity.value,
                        "label": label,
                        "route": route,
                        "value": self.values[label],
                        "reference": ref,
                        "error": errors[route][label],
                        "pass": abs(self.values[label] - ref) <= self.rtol * abs(ref) + self.atol,
                    }
                )
        return rows
