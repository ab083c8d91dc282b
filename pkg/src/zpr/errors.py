"""Exception hierarchy shared by every module of the package."""


class ZprError(Exception):
    """Base class for all errors raised by :mod:`zpr`."""


class NotPrime(ZprError, ValueError):
    pass


class BadExponent(ZprError, ValueError):
    pass


class RingOverflow(ZprError, OverflowError):
    """The modulus p**r does not fit below 2**63."""


class NotAUnit(ZprError, ArithmeticError):
    pass


class DimensionMismatch(ZprError, ValueError):
    """Vectors or modules live in different ambient spaces."""


class NotAPBasis(ZprError, ValueError):
    pass


class NotASubmoduleOf(ZprError, ValueError):
    """A module (or basis) expected to lie inside another one does not."""


class TooLarge(ZprError):
    """An exhaustive enumeration would exceed its state guard."""

    def __init__(self, needed, limit):
        super().__init__(f"enumeration needs {needed} states, guard is {limit}")
        self.needed = needed
        self.limit = limit
