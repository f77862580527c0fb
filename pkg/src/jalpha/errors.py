"""Exception hierarchy shared by the engine, the scanner and the CLI."""


class TheoremViolation(ArithmeticError):
    """A proven identity failed to hold; this is never an expected outcome."""


class NotPolynomial(TheoremViolation):
    """(q)_alpha**2 * J_alpha still has a nontrivial denominator."""


class NonIntegerCoefficient(TheoremViolation):
    """(q)_alpha**2 * J_alpha is a polynomial but not over the integers."""


class TodaError(ArithmeticError):
    """The Toda recursion could not be solved for J_alpha."""


class MonopoleAnomaly(ArithmeticError):
    """A multipartition with negative charge turned up in the monopole sum."""


class BudgetExceeded(RuntimeError):
    """A scan would exceed its configured degree or size budget."""
