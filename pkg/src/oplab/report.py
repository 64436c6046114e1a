"""Validation reports: named checks with optional counterexample witnesses."""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ValidationError


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    witness: str | None = None


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[Check, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def first_failure(self) -> Check | None:
        for c in self.checks:
            if not c.ok:
                return c
        return None

    def require(self, context: str = "") -> ValidationReport:
        """Raise ValidationError on the first failing check."""
        bad = self.first_failure()
        if bad is not None:
            where = f"{context}: " if context else ""
            detail = f" ({bad.witness})" if bad.witness else ""
            raise ValidationError(f"{where}{bad.name}{detail}")
        return self

    def merged(self, other: ValidationReport) -> ValidationReport:
        return ValidationReport(self.checks + other.checks)


def passing(name: str, witness: str | None = None) -> ValidationReport:
    return ValidationReport((Check(name, True, witness),))


def failing(name: str, witness: str) -> ValidationReport:
    return ValidationReport((Check(name, False, witness),))
