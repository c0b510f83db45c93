from typing import Optional, Sequence


class TautCalcError(Exception):
    """
    Base class for every error raised by the calculator.

    ``exit_code`` is what the command line returns, ``kind`` is the short label
    used in structured error messages.
    """
    exit_code = 1
    kind = "error"

    def to_dict(self) -> dict:
        return {
            'status': 'error',
            'kind': self.kind,
            'message': str(self),
            'exit_code': self.exit_code
        }


class UsageError(TautCalcError):
    kind = "usage"


class ExpressionSyntaxError(UsageError):
    kind = "syntax"

    def __init__(self, message: str, position: int, expected: Sequence[str] = ()):
        self.position = position
        self.expected = tuple(sorted(set(expected)))
        detail = f"{message} at position {position}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)


class IndexRangeError(UsageError):
    kind = "index"

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class ArithmeticDomainError(TautCalcError):
    kind = "arithmetic"


class ShapeMismatchError(TautCalcError):
    kind = "shape"


class NotTopDegreeError(TautCalcError):
    kind = "degree"


class RefusalError(TautCalcError):
    exit_code = 2
    kind = "refusal"

    def __init__(self, message: str, count: Optional[int] = None):
        self.count = count
        super().__init__(message)


class InvariantViolation(TautCalcError):
    exit_code = 3
    kind = "invariant"
