"""Exception hierarchy shared by every module of the package."""


class DocListError(Exception):
    """Base class for all errors raised by gcdoclist."""


class EmptyCollection(DocListError, ValueError):
    pass


class EmptyDocument(DocListError, ValueError):
    pass


class TerminatorInDocument(DocListError, ValueError):
    pass


class PositionOutOfRange(DocListError, IndexError):
    pass


class EmptyPattern(DocListError, ValueError):
    pass


class TerminatorInPattern(DocListError, ValueError):
    pass


class EmptySequence(DocListError, ValueError):
    pass


class SymbolOutOfRange(DocListError, ValueError):
    pass


class AlreadyCompleted(DocListError):
    pass


class GrammarNotCompleted(DocListError):
    pass


class UnknownSymbol(DocListError, KeyError):
    pass


class InvalidRange(DocListError, IndexError):
    pass


class UnsortedList(DocListError, ValueError):
    pass


class DocIdOutOfRange(DocListError, ValueError):
    pass


class NotSampled(DocListError, KeyError):
    pass


class UnsortedInput(DocListError, ValueError):
    """A list handed to the merger is not strictly increasing (index corruption)."""


class RateOutOfRange(DocListError, ValueError):
    pass


class InvalidSpec(DocListError, ValueError):
    pass


class PatternLengthInfeasible(DocListError, ValueError):
    pass


class BadIndexFile(DocListError):
    """Magic, version, layout or checksum of an index file is wrong."""
