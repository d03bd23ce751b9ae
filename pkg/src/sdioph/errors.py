"""Exception types shared across the package."""


class SDiophError(Exception):
    """Base class for all package errors."""


class InvalidPrimeSet(SDiophError, ValueError):
    pass


class NotPrime(InvalidPrimeSet):
    pass


class Duplicate(InvalidPrimeSet):
    pass


class Empty(InvalidPrimeSet):
    pass


class UnsupportedPrimeSize(InvalidPrimeSet):
    pass


class NonPositive(SDiophError, ValueError):
    pass


class NotAQuadruple(SDiophError, ValueError):
    pass


class SystemUnsatisfied(SDiophError, ValueError):
    pass


class ZeroCoordinate(SDiophError, ValueError):
    pass


class BudgetExceeded(SDiophError, RuntimeError):
    """A search would visit more grid points or candidates than allowed."""

    def __init__(self, required, budget, what="grid points"):
        self.required = required
        self.budget = budget
        super().__init__(f"{what} required ({required}) exceed budget ({budget})")


class DigitBudgetExceeded(SDiophError, RuntimeError):
    pass
