"""Exception hierarchy shared by every qltclab module."""


class QltcError(Exception):
    """Base class for all library errors."""


class ShapeMismatch(QltcError, ValueError):
    pass


class RankDeficient(QltcError, ValueError):
    pass


class NotCommuting(QltcError, ValueError):
    pass


class TooLarge(QltcError):
    """An exhaustive search would exceed the configured enumeration cap."""


class TrivialCode(QltcError, ValueError):
    """Soundness is undefined because every word has zero syndrome."""


class BadParameter(QltcError, ValueError):
    pass


class BadIndex(QltcError, IndexError):
    pass


class ParseError(QltcError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DegreeOverflow(ParseError):
    pass


class ValidationFailed(QltcError, ValueError):
    pass


class IoError(QltcError, OSError):
    """A bundle or matrix file could not be read or written."""
