"""Exception hierarchy for interval-weighted network analysis."""


class IWNError(Exception):
    """Base class for every error raised by this package."""


class InvalidInterval(IWNError, ValueError):
    pass


class DivisionByIntervalContainingZero(IWNError, ZeroDivisionError):
    pass


class UnknownVertex(IWNError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class DuplicateEdge(IWNError, ValueError):
    pass


class SelfLoop(IWNError, ValueError):
    pass


class InvalidRecord(IWNError, ValueError):
    pass


class MissingPeriod(IWNError, ValueError):
    pass


class SourceEqualsSink(IWNError, ValueError):
    pass


class VerticesNotDistinct(IWNError, ValueError):
    pass


class NegativeAlpha(IWNError, ValueError):
    pass


class BudgetExceeded(IWNError, RuntimeError):
    pass


class ParseError(IWNError, ValueError):
    """Raised when an input file does not match its declared schema.

    ``row`` is the 1-based line number in the file (header = line 1), or
    ``None`` when the problem is with the file as a whole.
    """

    def __init__(self, message, row=None):
        super().__init__(message)
        self.row = row
