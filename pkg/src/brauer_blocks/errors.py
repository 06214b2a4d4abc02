"""Exception hierarchy.

Every error raised by the library derives from :class:`BrauerError`, which is
a :class:`ValueError` so that callers validating user input can catch either.
"""


class BrauerError(ValueError):
    """Base class for all validation errors raised by brauer_blocks."""


class ZeroDelta(BrauerError):
    pass


class NotSubpartition(BrauerError):
    pass


class ParityMismatch(BrauerError):
    pass


class NotInDominantChamber(BrauerError):
    pass


class NotAdjacent(BrauerError):
    pass


class DifferentFacet(BrauerError):
    pass


class TooSingular(BrauerError):
    pass


class NotRegular(BrauerError):
    pass


class NotInOrbit(BrauerError):
    pass


class DifferentBlocks(BrauerError):
    pass


class NoDescent(BrauerError):
    pass


class SizeMismatch(BrauerError):
    pass


class BadDegree(BrauerError):
    pass


class WrongOrbit(BrauerError):
    pass


class ParseError(BrauerError):
    pass
