"""
Typed errors raised across hamcay.

Every error carries an `exit_code` for the CLI and a `to_dict()` witness
that serializes to JSON.
"""
from typing import Any, Dict, Optional


class HamcayError(Exception):
    """Base class for all hamcay errors"""
    exit_code = 4

    def __init__(self, message: str, witness: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.witness = witness or {}

    def to_dict(self) -> Dict[str, Any]:
        return {"error": type(self).__name__, "message": self.message, "witness": self.witness}


# Usage and input errors (exit 4)

class UsageError(HamcayError):
    pass


class ConfigError(HamcayError):
    pass


class FormatError(HamcayError):
    """Decomposition JSON that does not follow the canonical format"""


class NotFourRegular(HamcayError):
    def __init__(self, k: int, l: int):
        super().__init__(f"G_{{{k},{l}}} is not 4-regular", {"k": k, "l": l})
        self.k, self.l = k, l


class NotGenerating(HamcayError):
    pass


class ChainMismatch(HamcayError):
    pass


class UnknownFixture(HamcayError):
    pass


class WindowTooSmall(HamcayError):
    pass


class BudgetExceeded(HamcayError):
    pass


class QuotientTooSmall(HamcayError):
    pass


class LNotPositive(HamcayError):
    pass


class RangeTooSmall(HamcayError):
    pass


class NotPrevalent(HamcayError):
    def __init__(self, message: str, report: Any = None):
        super().__init__(message, report.to_dict() if report is not None else None)
        self.report = report


class NotTwoRegular(HamcayError):
    """A vertex meets the class in a number of edges other than two"""

    def __init__(self, vertex, degree: int):
        super().__init__(f"vertex {tuple(vertex)} has degree {degree} in the class",
                         {"vertex": list(vertex), "degree": degree})
        self.vertex = vertex
        self.degree = degree


# Obstructions (exit 2)

class ParityMismatch(HamcayError):
    exit_code = 2


class NotFound(HamcayError):
    exit_code = 2


class NoLiftSolution(HamcayError):
    exit_code = 2


class SquareGridUnsupported(HamcayError):
    exit_code = 2


# Verification failures (exit 3)

class InvalidDecomposition(HamcayError):
    exit_code = 3


class VerificationFailed(HamcayError):
    exit_code = 3


class VerificationRegression(HamcayError):
    """A construction produced output that fails its own postcondition"""
    exit_code = 3
