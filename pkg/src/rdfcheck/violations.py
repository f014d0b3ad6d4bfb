"""Violation records produced by every checker."""

from __future__ import annotations

from dataclasses import dataclass, field

from .catalog import Severity
from .terms import Term


@dataclass(frozen=True, slots=True)
class MetricRecord:
    """An informational count emitted by aggregation constraints that ship
    without an expectation."""

    constraint_id: str
    focus: str
    name: str
    value: int

    def sort_key(self) -> tuple[str, str, str]:
        return (self.constraint_id, self.focus, self.name)


class ResourceLimit(Exception):
    """A checker hit its configured resource bound; the engine records the
    constraint as skipped instead of failing the run."""


@dataclass(frozen=True, slots=True)
class Violation:
    """One finding.

    Two violations are equal iff (constraint_id, focus, detail) are equal;
    the engine dedups on that key. ``focus`` and ``detail`` are kept as
    serialized text so records stay hashable and sort bit-stably.
    """

    constraint_id: str
    severity: Severity
    focus: str
    detail: str
    message: str = field(compare=False)
    check_path: tuple[str, ...] = field(default=(), compare=False)

    def sort_key(self) -> tuple[int, str, str, str]:
        return (-int(self.severity), self.constraint_id, self.focus, self.detail)


def make_violation(
    constraint_id: str,
    severity: Severity,
    focus: Term | str | None,
    detail: Term | str | int | None,
    message: str,
    check_path: tuple[str, ...] = (),
) -> Violation:
    """Build a violation; the message always leads with the constraint id."""
    focus_text = "" if focus is None else str(focus)
    detail_text = "" if detail is None else str(detail)
    return Violation(
        constraint_id=constraint_id,
        severity=severity,
        focus=focus_text,
        detail=detail_text,
        message=f"{constraint_id}: {message}",
        check_path=check_path,
    )
