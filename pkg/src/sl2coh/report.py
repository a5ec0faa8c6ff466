from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Any


class ExitStatus(IntEnum):
    OK = 0
    VIOLATIONS_FOUND = 1
    USAGE_ERROR = 2


@dataclass
class RunReport:
    """Rows of a table or sweep, plus any bound/identity violations found."""

    command: str
    parameters: dict[str, Any] = field(default_factory=dict)
    rows: list[dict[str, Any]] = field(default_factory=list)
    violations: list[dict[str, Any]] = field(default_factory=list)
    summary: dict[str, Any] = field(default_factory=dict)
    usage_error: str | None = None

    @property
    def exit_status(self) -> ExitStatus:
        if self.usage_error is not None:
            return ExitStatus.USAGE_ERROR
        return ExitStatus.VIOLATIONS_FOUND if self.violations else ExitStatus.OK

    @property
    def ok(self) -> bool:
        return self.exit_status is ExitStatus.OK

    def violation(self, **record) -> None:
        self.violations.append(record)

    def merge(self, other: "RunReport") -> None:
        self.rows.extend(other.rows)
        self.violations.extend(other.violations)
        self.summary.update(other.summary)


def to_csv(rows: list[dict[str, Any]]) -> str:
    if not rows:
        return ""
    keys = list(rows[0])
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def to_json(rows: list[dict[str, Any]]) -> str:
    return json.dumps(rows, indent=1)


def from_csv(text: str) -> list[dict[str, Any]]:
    def conv(v: str):
        try:
            return int(v)
        except ValueError:
            return v

    return [{k: conv(v) for k, v in row.items()} for row in csv.DictReader(io.StringIO(text))]
