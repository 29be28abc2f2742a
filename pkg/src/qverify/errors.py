"""Exception types shared across the package."""


class QVerifyError(Exception):
    pass


class SeriesError(QVerifyError, ArithmeticError):
    pass


class NotAUnit(SeriesError):
    """Raised when inverting a series whose constant term is not +1 or -1."""


class InsufficientPrecision(SeriesError):
    """Raised when a request needs coefficients beyond a series' precision."""


class NotCoprime(QVerifyError, ValueError):
    pass


class TooLarge(QVerifyError, ValueError):
    """Raised when an exhaustive enumeration is asked for n beyond its limit."""


class UnknownIdentity(QVerifyError, KeyError):
    pass


class UnknownCheck(QVerifyError, KeyError):
    pass


class ParseError(QVerifyError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position
