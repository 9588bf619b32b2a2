"""Exception types shared across the package."""


class TwistRootsError(Exception):
    """Base class for all errors raised by twistroots."""


class RankError(TwistRootsError, ValueError):
    """A generator index or rank does not fit the ambient free group."""


class UnsupportedRankError(TwistRootsError, ValueError):
    """The requested construction does not exist in this rank."""


class DimensionError(TwistRootsError, ValueError):
    """Matrix or vector dimensions are incompatible."""


class BudgetExceeded(TwistRootsError, RuntimeError):
    """A word computation outgrew its letter budget."""


class ConstructionError(TwistRootsError, RuntimeError):
    """A construction produced an object of the wrong shape."""


class UnsupportedGluing(TwistRootsError, ValueError):
    """A polygon gluing is invalid or yields a non-orientable surface."""


class ParseError(TwistRootsError, ValueError):
    """Text could not be parsed in the expected grammar."""
