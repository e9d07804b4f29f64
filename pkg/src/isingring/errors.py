"""Exception types raised by the library."""


class IsingRingError(ValueError):
    """Base class for all argument/state errors raised here."""


class NotHermitian(IsingRingError):
    pass


class BadSiteSet(IsingRingError):
    pass


class DimMismatch(IsingRingError):
    pass


class InvalidParams(IsingRingError):
    pass


class OddRingUnsupported(IsingRingError):
    pass


class DegenerateGroundState(IsingRingError):
    pass


class WrongSize(IsingRingError):
    pass


class OddQubitCount(IsingRingError):
    pass


class TooManyParties(IsingRingError):
    pass
