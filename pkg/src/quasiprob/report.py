from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Check:
    """Outcome of one named law or invariant over a batch of inputs."""

    name: str
    passed: bool
    checked: int = 0
    counterexample: tuple[Any, ...] | None = None
    detail: str = ""

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        out = f"{status}  {self.name} ({self.checked} checked)"
        if self.counterexample is not None:
            from .valuation.syntax import format_value

            def show(x: Any) -> str:
                try:
                    return format_value(x)
                except TypeError:
                    return repr(x)

            out += "  counterexample: " + ", ".join(show(x) for x in self.counterexample)
        if self.detail:
            out += f"  [{self.detail}]"
        return out


@dataclass(frozen=True)
class Report:
    title: str
    checks: tuple[Check, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self) -> bool:
        return self.ok

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def render(self) -> str:
        lines = [self.title]
        lines += ["  " + c.line() for c in self.checks]
        lines.append("  result: " + ("pass" if self.ok else "FAIL"))
        return "\n".join(lines)
