"""Machine-readable reports for the verification suites.

A :class:`CheckReport` records one suite run: name, effective parameters,
number of individual facts checked, and the list of counterexamples (the run
failed iff that list is nonempty).  Serialization is deterministic -- sorted
keys, fixed indentation, trailing newline -- and wall time is excluded unless
explicitly requested, so two runs with identical parameters produce
byte-identical JSON and CSV.  The JSON layout is described by the shipped
schema ``data/report.schema.json``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from importlib import resources

__all__ = [
    "CheckReport",
    "report_document",
    "render_json",
    "render_csv",
    "render_text",
    "load_schema",
    "SCHEMA_VERSION",
]

SCHEMA_VERSION = 1
_SCHEMA_RESOURCE = "data/report.schema.json"


@dataclass(frozen=True)
class CheckReport:
    """Result of one verification suite."""

    name: str
    params: dict
    checks: int
    counterexamples: tuple
    wall_time: float = 0.0

    def __post_init__(self):
        if self.checks < 0:
            raise ValueError("checks must be non-negative")
        if any(not isinstance(c, str) for c in self.counterexamples):
            raise TypeError("counterexamples must be strings")

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self, include_timings: bool = False) -> dict:
        out = {
            "name": self.name,
            "params": dict(self.params),
            "status": self.status,
            "checks": self.checks,
            "counterexamples": list(self.counterexamples),
        }
        if include_timings:
            out["wall_time"] = round(self.wall_time, 3)
        return out


def report_document(
    reports: list[CheckReport],
    *,
    seed: int | None = None,
    include_timings: bool = False,
) -> dict:
    """Assemble the top-level report document for a list of suite runs."""
    return {
        "schema_version": SCHEMA_VERSION,
        "generator": "charverify",
        "seed": seed,
        "all_passed": all(r.passed for r in reports),
        "suites": [r.to_dict(include_timings) for r in reports],
    }


def render_json(document: dict) -> str:
    """Deterministic JSON rendering: sorted keys, two-space indent."""
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def render_csv(
    reports: list[CheckReport], include_timings: bool = False
) -> str:
    """One row per suite; deterministic column order and line endings."""
    buffer = io.StringIO()
    fields = ["name", "status", "checks", "counterexamples"]
    if include_timings:
        fields.append("wall_time")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(fields)
    for r in reports:
        row = [r.name, r.status, r.checks, len(r.counterexamples)]
        if include_timings:
            row.append(round(r.wall_time, 3))
        writer.writerow(row)
    return buffer.getvalue()


def render_text(reports: list[CheckReport], include_timings: bool = False) -> str:
    """Human-readable one-line-per-suite summary."""
    lines = []
    for r in reports:
        timing = f" [{r.wall_time:.2f}s]" if include_timings else ""
        lines.append(
            f"suite {r.name}: {r.status.upper()} "
            f"({r.checks} checks, {len(r.counterexamples)} counterexamples)"
            f"{timing}"
        )
        for c in r.counterexamples[:10]:
            lines.append(f"  counterexample: {c}")
        if len(r.counterexamples) > 10:
            lines.append(
                f"  ... and {len(r.counterexamples) - 10} more"
            )
    return "\n".join(lines) + "\n" if lines else ""


def load_schema() -> dict:
    """The JSON schema the report document conforms to."""
    text = (
        resources.files("charverify").joinpath(_SCHEMA_RESOURCE).read_text("utf-8")
    )
    return json.loads(text)
