"""Exception types raised across the package."""


class NarayanaLabError(Exception):
    pass


class DivByNonUnit(NarayanaLabError, ZeroDivisionError):
    """Series division by a series with zero constant term."""


class ExpNonzeroConstant(NarayanaLabError, ValueError):
    pass


class LogNonUnitConstant(NarayanaLabError, ValueError):
    pass


class OutOfRange(NarayanaLabError, ValueError):
    pass


class UndefinedForN1(NarayanaLabError, ValueError):
    pass


class BadMu(NarayanaLabError, ValueError):
    """Parameter mu must be an exact rational strictly greater than -1."""


class TooLarge(NarayanaLabError, ValueError):
    pass


class EvenIndex(NarayanaLabError, ValueError):
    pass


class NoConvergence(NarayanaLabError, RuntimeError):
    pass


class NoneFound(NarayanaLabError, LookupError):
    pass


class ZeroInput(NarayanaLabError, ValueError):
    pass
