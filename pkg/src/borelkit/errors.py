"""Exception hierarchy shared by the library and the command line front end."""


class BorelKitError(Exception):
    """Base class for every error raised by borelkit."""


class ContextMismatch(BorelKitError, ValueError):
    """Two monomials or ideals live in rings with different numbers of variables."""


class NotDivisible(BorelKitError, ArithmeticError):
    """Exact monomial division was requested but the divisor does not divide."""


class DegenerateIdeal(BorelKitError, ValueError):
    """The zero or unit ideal was passed to an operation that needs deg(I)."""


class NotBorelType(BorelKitError):
    """No stable truncation exists in the searched degree range."""

    def __init__(self, message, trace=()):
        super().__init__(message)
        self.trace = tuple(trace)


class StructureViolation(BorelKitError):
    """A generating set does not have the Borel-type stratified shape."""


class BudgetExceeded(BorelKitError):
    """A brute-force computation would enumerate more multidegrees than allowed."""


class InfeasibleBudget(BorelKitError, ValueError):
    """The parameters handed to a random generator cannot be satisfied."""


class SaturationCapExceeded(BorelKitError, RuntimeError):
    """A saturation fixpoint did not stabilize within its proven iteration cap.

    This signals an internal bug, never bad input.
    """
