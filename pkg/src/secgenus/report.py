"""Check results and report containers.

Every verification (model validation, identity suites, bound suites)
produces a ``VerificationReport``: a flat list of named checks, each
carrying the compared values as strings plus a pass flag.  A check may
instead be *abstained* when its inputs could not be certified; abstained
checks never count as failures, but the CLI can be told to treat them as
fatal (exit code 3).

Reports serialize deterministically: same checks in, same bytes out.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field


def fmt(value) -> str:
    """Render a value for a report cell (Fractions stay exact)."""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


@dataclass
class Check:
    name: str
    passed: bool | None  # None means abstained
    expected: str = ""
    actual: str = ""
    inputs: dict[str, str] = field(default_factory=dict)
    note: str = ""

    @property
    def abstained(self) -> bool:
        return self.passed is None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "inputs": self.inputs,
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
        }


@dataclass
class VerificationReport:
    title: str
    checks: list[Check] = field(default_factory=list)
    annotations: list[str] = field(default_factory=list)

    def add(
        self,
        name: str,
        passed: bool | None,
        expected="",
        actual="",
        inputs: dict | None = None,
        note: str = "",
    ) -> Check:
        check = Check(
            name=name,
            passed=passed,
            expected=fmt(expected),
            actual=fmt(actual),
            inputs={k: fmt(v) for k, v in (inputs or {}).items()},
            note=note,
        )
        self.checks.append(check)
        return check

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)
        self.annotations.extend(other.annotations)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.passed is False]

    @property
    def abstentions(self) -> list[Check]:
        return [c for c in self.checks if c.abstained]

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        return {
            "total": len(self.checks),
            "passed": sum(1 for c in self.checks if c.passed),
            "failed": len(self.failures),
            "abstained": len(self.abstentions),
        }

    def to_dict(self) -> dict:
        return {
            "suite": self.title,
            "checks": [c.to_dict() for c in self.checks],
            "summary": self.summary(),
            "annotations": self.annotations,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["name", "inputs", "expected", "actual", "pass"])
        for c in self.checks:
            inputs = ";".join(f"{k}={v}" for k, v in sorted(c.inputs.items()))
            status = "abstain" if c.abstained else ("pass" if c.passed else "FAIL")
            writer.writerow([c.name, inputs, c.expected, c.actual, status])
        return buffer.getvalue()

    def to_table(self) -> str:
        rows = [("check", "expected", "actual", "status")]
        for c in self.checks:
            status = "abstain" if c.abstained else ("pass" if c.passed else "FAIL")
            rows.append((c.name, c.expected, c.actual, status))
        widths = [max(len(row[i]) for row in rows) for i in range(4)]
        lines = [f"# {self.title}"]
        for idx, row in enumerate(rows):
            lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
            if idx == 0:
                lines.append("  ".join("-" * w for w in widths))
        s = self.summary()
        lines.append(
            f"total={s['total']} passed={s['passed']} failed={s['failed']} "
            f"abstained={s['abstained']}"
        )
        for note in self.annotations:
            lines.append(f"note: {note}")
        return "\n".join(lines) + "\n"
