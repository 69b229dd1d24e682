"""Exception types shared across the package."""


class Hq3Error(Exception):
    """Base class for all library errors."""


class MismatchedDiscriminant(Hq3Error):
    """Arithmetic between Q(sqrt(D)) elements with different D."""


class DivisionByZero(Hq3Error, ZeroDivisionError):
    """Inversion of zero or of a zero divisor."""


class DegenerateRoots(Hq3Error):
    """p^2 - 4q = 0: the characteristic roots coincide."""


class ZeroRoot(Hq3Error):
    """q = 0: one characteristic root vanishes."""


class MismatchedParams(Hq3Error):
    """Arithmetic between quaternions with different (l1, l2, l3)."""


class UndefinedSequence(Hq3Error):
    """A normalized sequence value whose defining denominator vanishes."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class DegenerateDenominator(Hq3Error):
    """A closed-form denominator such as q^s - V_s + 1 vanishes."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class UnknownIdentity(Hq3Error):
    """Identity id not present in the catalog."""
