"""Verification reports shared by the suites and the command line."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    counterexample: object = None


@dataclass
class Report:
    title: str
    seed: int | None = None
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, name, passed, detail="", counterexample=None):
        self.checks.append(Check(name, bool(passed), detail, counterexample))
        return passed

    def note(self, text):
        self.notes.append(text)

    def extend(self, other: "Report"):
        for c in other.checks:
            self.checks.append(Check(f"{other.title}: {c.name}", c.passed,
                                     c.detail, c.counterexample))
        self.notes.extend(f"{other.title}: {n}" for n in other.notes)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_text(self):
        lines = [f"== {self.title} ==" + (f" (seed {self.seed})" if self.seed is not None else "")]
        for c in self.checks:
            line = f"[{'PASS' if c.passed else 'FAIL'}] {c.name}"
            if c.detail:
                line += f" -- {c.detail}"
            lines.append(line)
            if not c.passed and c.counterexample is not None:
                lines.append(f"    counterexample: {c.counterexample}")
        for n in self.notes:
            lines.append(f"note: {n}")
        lines.append("RESULT: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)

    def to_dict(self):
        return {
            "title": self.title,
            "seed": self.seed,
            "passed": self.passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail,
                        "counterexample": _jsonable(c.counterexample)}
                       for c in self.checks],
            "notes": list(self.notes),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def __str__(self):
        return self.to_text()


def _jsonable(x):
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)
