"""Exception hierarchy.  Every error raised on bad input derives from ``KLError``."""


class KLError(Exception):
    pass


class SpecParseError(KLError, ValueError):
    """A matroid spec string or input file could not be parsed."""


class LoopsPresent(KLError, ValueError):
    pass


class InvalidLattice(KLError, ValueError):
    pass


class TooLarge(KLError):
    pass


class FlatNotInLattice(KLError, KeyError):
    pass


class NotComparable(KLError, ValueError):
    pass


class RankOutOfRange(KLError, ValueError):
    pass


class IndexOutOfRange(KLError, ValueError):
    pass


class UnsupportedIndex(KLError, ValueError):
    pass


class RankZero(KLError, ValueError):
    pass


class AntisymmetryViolated(KLError, AssertionError):
    """Internal consistency failure in the KL recursion; indicates a bug."""


class NegativeHCoefficient(KLError, AssertionError):
    """The broken-circuit h-polynomial came out with a negative coefficient."""
