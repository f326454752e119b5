"""Exception hierarchy shared by every module of the package."""


class KodagError(Exception):
    """Base class for all domain errors raised by kodag."""


class NotAcyclic(KodagError):
    pass


class LengthMismatch(KodagError, ValueError):
    pass


class NotLinearExtension(KodagError, ValueError):
    pass


class NotTotalOrder(KodagError):
    pass


class NotPartialOrder(KodagError, ValueError):
    pass


class SearchBoundExceeded(KodagError):
    pass


class ConsistencyFailure(KodagError, AssertionError):
    """An internal cross-check disagreed; never swallow this."""


class ParseError(KodagError, ValueError):
    pass


class InvalidSequence(KodagError, ValueError):
    pass


class BudgetExceeded(KodagError):
    pass


class InvalidVertex(KodagError, ValueError):
    pass


class LevelOutOfRange(KodagError, IndexError):
    pass


class ForeignArc(KodagError, ValueError):
    pass
