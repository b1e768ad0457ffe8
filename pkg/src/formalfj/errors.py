"""Exception types and the violation report shared by the validators."""

from __future__ import annotations

from dataclasses import dataclass, field


class FormalFJError(Exception):
    """Base class for all engine errors."""

    code = "error"

    def to_json(self):
        return {"error": self.code, "message": str(self)}


class DivisionByZero(FormalFJError, ZeroDivisionError):
    code = "DivisionByZero"


class ZeroDivisor(FormalFJError, ZeroDivisionError):
    code = "ZeroDivisor"


class BadWeight(FormalFJError, ValueError):
    code = "BadWeight"


class UnsupportedWeight(BadWeight):
    code = "UnsupportedWeight"


class PrecisionTooLow(FormalFJError):
    code = "PrecisionTooLow"


class IncompatibleShapes(FormalFJError, ValueError):
    code = "IncompatibleShapes"


class IncompatiblePrecision(FormalFJError, ValueError):
    code = "IncompatiblePrecision"


class NonInvertibleLeadingCoefficient(FormalFJError, ZeroDivisionError):
    code = "NonInvertibleLeadingCoefficient"


class NotSymmetric(FormalFJError):
    code = "NotSymmetric"

    def __init__(self, triple):
        self.triple = triple
        super().__init__("symmetry relation fails at (m, n, r) = %s" % (triple,))


class DegenerateGram(FormalFJError, ValueError):
    code = "DegenerateGram"


@dataclass
class Report:
    """Outcome of a validator: a list of ``(kind, detail)`` violations."""

    subject: str
    violations: list = field(default_factory=list)

    def fail(self, kind, detail):
        self.violations.append((kind, detail))

    @property
    def passed(self):
        return not self.violations

    def kinds(self):
        return {kind for kind, _ in self.violations}

    def __bool__(self):
        return self.passed

    def to_json(self):
        return {
            "subject": self.subject,
            "passed": self.passed,
            "violations": [[k, str(d)] for k, d in self.violations],
        }
