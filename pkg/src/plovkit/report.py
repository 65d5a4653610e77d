"""Report records and canonical JSON serialization for the command line tools.

All integers are serialized as decimal strings so that exact values survive
any JSON reader, including ones that truncate to 64-bit floats. Serialization
is canonical (sorted keys, fixed separators): parsing an emitted report and
re-serializing it reproduces the bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction


@dataclass(frozen=True)
class CheckRecord:
    name: str
    claim: str
    status: str                      # "pass" | "fail" | "observed"
    values: dict = field(default_factory=dict)


@dataclass
class Report:
    version: str
    config: dict
    records: list[CheckRecord] = field(default_factory=list)
    timing_seconds: float = 0.0

    def add(self, name: str, claim: str, ok_or_status, **values) -> CheckRecord:
        if isinstance(ok_or_status, bool):
            status = "pass" if ok_or_status else "fail"
        else:
            status = str(ok_or_status)
        rec = CheckRecord(name, claim, status, values)
        self.records.append(rec)
        return rec

    @property
    def failed(self) -> list[CheckRecord]:
        return [r for r in self.records if r.status == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failed

    def summary_lines(self) -> list[str]:
        lines = []
        for r in self.records:
            detail = ""
            if r.values:
                detail = "  " + " ".join(f"{k}={_plain(v)}" for k, v in sorted(r.values.items()))
            lines.append(f"[{r.status.upper():8s}] {r.name}{detail}")
        lines.append(
            f"{len(self.records)} checks: "
            f"{sum(r.status == 'pass' for r in self.records)} pass, "
            f"{len(self.failed)} fail, "
            f"{sum(r.status == 'observed' for r in self.records)} observed"
        )
        return lines

    def to_jsonable(self) -> dict:
        return {
            "version": self.version,
            "config": jsonable(self.config),
            "records": [
                {
                    "name": r.name,
                    "claim": r.claim,
                    "status": r.status,
                    "values": jsonable(r.values),
                }
                for r in self.records
            ],
            "timing_seconds": self.timing_seconds,
        }

    def to_json(self) -> str:
        return canonical_json(self.to_jsonable())


def jsonable(value):
    """Recursively convert to JSON-safe values; exact numbers become strings."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return value
    if isinstance(value, str):
        return value
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return str(value)


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, separators=(",", ": ")) + "\n"


def _plain(value) -> str:
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_plain(v) for v in value) + "]"
    return str(value)
