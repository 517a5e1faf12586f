"""Exception types raised by the combinatorics modules."""


class SkewSchurError(ValueError):
    """Base class for every domain error in this package."""


class NotContained(SkewSchurError):
    pass


class EmptyColumn(SkewSchurError):
    pass


class InvalidColumn(SkewSchurError):
    pass


class NotBasic(SkewSchurError):
    pass


class StripTooDeep(SkewSchurError):
    pass


class TooManyRows(SkewSchurError):
    pass


class PreconditionFailed(SkewSchurError):
    """A documented hypothesis of an operation does not hold.

    ``failed`` lists the names of the violated hypotheses.
    """

    def __init__(self, message, failed=()):
        super().__init__(message)
        self.failed = tuple(failed)


class NotReduced(PreconditionFailed):
    """Shape is not basic, n-sharp, tight and ordinary."""


class ParseError(SkewSchurError):
    pass
