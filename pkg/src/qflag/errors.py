"""Exception hierarchy shared by every qflag module."""


class QFlagError(Exception):
    """Base class for all user-facing errors."""

    kind = "error"


class IncompatibleRootError(QFlagError):
    kind = "incompatible-root"


class DivisionByZero(QFlagError, ZeroDivisionError):
    kind = "division-by-zero"


class ContextMismatchError(QFlagError):
    kind = "context-mismatch"


class InvalidElementError(QFlagError):
    """An element is not valid in the context it was used in."""

    kind = "invalid-element"


class NotAugmentationError(QFlagError):
    """Raised when an operation needs an element of ker(counit)."""

    kind = "counit-nonzero"


class CoinvarianceError(QFlagError):
    kind = "coinvariance-violation"


class NotHomogeneousError(QFlagError):
    kind = "not-homogeneous"


class BoundError(QFlagError):
    kind = "bound-too-small"


class UnknownSuiteError(QFlagError):
    kind = "unknown-suite"


class ResourceGuardError(QFlagError):
    kind = "resource-guard"


class InternalInvariantError(QFlagError):
    """Something that must be impossible happened; indicates a bug."""

    kind = "internal-invariant"


class ParseError(QFlagError):
    kind = "syntax-error"

    def __init__(self, message, text="", pos=0):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.line, self.col = line, col
        super().__init__(f"{message} (line {line}, column {col})")


class UnknownIdentifierError(ParseError):
    kind = "unknown-identifier"


class IndexRangeError(ParseError):
    kind = "index-out-of-range"
