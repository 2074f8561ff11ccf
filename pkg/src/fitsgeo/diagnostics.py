"""Diagnostic records shared by the validator and the deck parser."""

from __future__ import annotations

from dataclasses import dataclass

ERROR = "error"
WARNING = "warning"


@dataclass(frozen=True)
class SourceSpan:
    """1-based line and column range in a text input."""

    line: int
    col_start: int = 1
    col_end: int = 1

    def __str__(self) -> str:
        return f"line {self.line}, col {self.col_start}-{self.col_end}"


@dataclass(frozen=True)
class Diagnostic:
    severity: str
    code: str
    message: str
    location: str | SourceSpan | None = None

    def __str__(self) -> str:
        loc = f" [{self.location}]" if self.location is not None else ""
        return f"{self.severity}: {self.code}: {self.message}{loc}"


def errors_in(diagnostics) -> list[Diagnostic]:
    return [d for d in diagnostics if d.severity == ERROR]
