"""Exception types raised across the package."""


class PGroupoidError(Exception):
    """Base class for every error this package raises on bad input."""


class MalformedTable(PGroupoidError, ValueError):
    pass


class OutOfRange(PGroupoidError, ValueError):
    pass


class NotBijective(PGroupoidError, ValueError):
    pass


class NotUnique(PGroupoidError, ValueError):
    """A division x\\y or y/x has zero or several solutions."""


class EvenOrder(PGroupoidError, ValueError):
    pass


class NotUnit(PGroupoidError, ValueError):
    pass


class OrderCapExceeded(PGroupoidError, RuntimeError):
    pass


class NotSubgroup(PGroupoidError, ValueError):
    pass


class NotPGroupoid(PGroupoidError, ValueError):
    pass


class InvalidDecomposition(PGroupoidError, ValueError):
    pass


class NotSurjective(PGroupoidError, ValueError):
    pass
