"""Exception types raised across qcforge."""


class QCForgeError(Exception):
    pass


class FieldMismatchError(QCForgeError, ValueError):
    """Operands live over different fields."""


class InvalidInputError(QCForgeError, ValueError):
    pass


class DivisibilityError(QCForgeError, ValueError):
    """A polynomial that must divide x^m - 1 (or another polynomial) does not."""


class ClosureError(QCForgeError, ValueError):
    """A product of linear factors has coefficients outside the base field."""


class RankError(QCForgeError, ValueError):
    pass


class BudgetExceededError(QCForgeError, RuntimeError):
    """Exhaustive enumeration would exceed the configured dimension budget."""


class SpecError(QCForgeError, ValueError):
    """A QC generator tuple violates the ASR hypotheses."""


class NotASubcodeError(QCForgeError, ValueError):
    pass


class RecordFormatError(QCForgeError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
