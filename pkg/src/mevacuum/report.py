"""Report records and their two renderings (canonical JSON, aligned table)."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .units import from_gaussian

REPORT_SCHEMA = "mevacuum-report/1"


def quantity(value: float, dimension: str, system: str) -> dict:
    """A reported number with its unit, converted from Gaussian."""
    converted, unit = from_gaussian(value, dimension, system)
    return {"value": converted, "unit": unit}


def dimensionless(value: float) -> dict:
    return {"value": float(value), "unit": "1"}


@dataclass
class ReportRecord:
    command: str
    config: dict
    results: dict
    conventions: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)
    # header row followed by data rows, for external plotting
    columns: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "command": self.command,
            "config": self.config,
            "results": self.results,
            "conventions": self.conventions,
            "notes": self.notes,
            "warnings": list(self.warnings),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=True) + "\n"

    def to_columns(self) -> str:
        return "".join("\t".join(_cell(c) for c in row) + "\n" for row in self.columns)

    def to_table(self) -> str:
        rows = list(_flatten(self.results))
        width = max((len(k) for k, _, _ in rows), default=0)
        lines = [f"# {self.command}"]
        for key, value, unit in rows:
            if isinstance(value, float):
                shown = f"{value:.6e}"
            else:
                shown = str(value)
            lines.append(f"{key:<{width}}  {shown:>16}  {unit}".rstrip())
        for w in self.warnings:
            lines.append(f"warning: {w}")
        for k, v in sorted(self.notes.items()):
            lines.append(f"note [{k}]: {v}")
        return "\n".join(lines) + "\n"


def _flatten(tree, prefix=""):
    if isinstance(tree, dict) and set(tree) == {"value", "unit"}:
        yield prefix, tree["value"], tree["unit"]
        return
    if isinstance(tree, dict):
        for key in sorted(tree):
            yield from _flatten(tree[key], f"{prefix}.{key}" if prefix else key)
    elif isinstance(tree, list):
        for i, item in enumerate(tree):
            yield from _flatten(item, f"{prefix}[{i}]")
    else:
        yield prefix, tree, ""


def _cell(value) -> str:
    return repr(value) if isinstance(value, float) else str(value)
