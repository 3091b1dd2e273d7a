"""Declarative problem files: `key = value` lines, one task per file.

Unknown keys are rejected, parse errors carry line and column numbers, and
parsing is deterministic: the canonical text (task first, other keys in
sorted order) is what reports echo and replay.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .literals import parse_rat


class ProblemError(ValueError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        where = f" (line {line}, column {col})" if line else ""
        super().__init__(message + where)
        self.line = line
        self.col = col


TASKS = {
    "weaknull": {"family", "budget-j", "budget-k", "alpha-grid", "subseq"},
    "weaknull-at": {"family", "point", "budget-j", "budget-k", "alpha-grid",
                    "subseq", "ell-max"},
    "essrange": {"domain", "function"},
    "essrange-at": {"domain", "function", "point"},
    "finite-model": {"weights", "vectors", "masses"},
    "restrict": {"domain", "atoms", "density", "set", "alpha"},
    "corpus": set(),
}

REQUIRED = {
    "weaknull": {"family"},
    "weaknull-at": {"family", "point"},
    "essrange": {"domain", "function"},
    "essrange-at": {"domain", "function", "point"},
    "finite-model": {"weights"},
    "restrict": {"domain"},
    "corpus": set(),
}


@dataclass
class ProblemFile:
    task: str
    fields: dict[str, str]

    def canonical_lines(self) -> list[str]:
        lines = [f"task = {self.task}"]
        for key in sorted(self.fields):
            lines.append(f"{key} = {self.fields[key]}")
        return lines

    def canonical_text(self) -> str:
        return "\n".join(self.canonical_lines()) + "\n"

    def get(self, key: str, default: str | None = None) -> str | None:
        return self.fields.get(key, default)

    def get_int(self, key: str, default: int) -> int:
        raw = self.fields.get(key)
        if raw is None:
            return default
        try:
            return int(raw)
        except ValueError:
            raise ProblemError(f"{key} must be an integer, got {raw!r}")

    def get_rats(self, key: str) -> list[Fraction] | None:
        raw = self.fields.get(key)
        if raw is None:
            return None
        try:
            return [parse_rat(part.strip()) for part in raw.split(",")]
        except ValueError as exc:
            raise ProblemError(f"{key}: {exc}")


def parse_problem_text(text: str) -> ProblemFile:
    task = None
    fields: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ProblemError("expected 'key = value'", lineno, 1)
        key, _, value = line.partition("=")
        key = key.strip().lower()
        value = value.strip()
        if not key:
            raise ProblemError("empty key", lineno, 1)
        if not value:
            raise ProblemError(f"empty value for {key!r}", lineno,
                               raw.index("=") + 2)
        if key == "task":
            if task is not None:
                raise ProblemError("duplicate task line", lineno, 1)
            if value not in TASKS:
                raise ProblemError(f"unknown task {value!r}; known: "
                                   f"{sorted(TASKS)}", lineno,
                                   raw.index(value) + 1)
            task = value
            continue
        if key in fields:
            raise ProblemError(f"duplicate key {key!r}", lineno, 1)
        fields[key] = value
    if task is None:
        raise ProblemError("missing 'task = ...' line")
    allowed = TASKS[task]
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#") or "=" not in line:
            continue
        key = line.partition("=")[0].strip().lower()
        if key != "task" and key not in allowed:
            raise ProblemError(f"field {key!r} is not valid for task {task!r}; "
                               f"allowed: {sorted(allowed) or 'none'}",
                               lineno, raw.index(key) + 1)
    missing = REQUIRED[task] - set(fields)
    if missing:
        raise ProblemError(f"task {task!r} is missing required fields "
                           f"{sorted(missing)}")
    return ProblemFile(task, fields)
