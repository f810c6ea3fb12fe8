"""Exception hierarchy shared by all partbias modules."""


class PartBiasError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(PartBiasError):
    """Bad user input (part sets, progression parameters, ...)."""


class DisjointnessViolation(ValidationError):
    """An element appears in more than one of R, S, I."""


class NonPositivePart(ValidationError):
    """A part is smaller than 1."""


class EmptyRS(ValidationError):
    """R or S is empty."""


class GcdHypothesisViolated(ValidationError):
    """gcd(R union S) != 1, so the closed-form limit does not apply."""


class DegenerateDenominator(ValidationError):
    """A denominator in an alternating sum or volume recursion is zero."""


class InconsistentInput(ValidationError):
    """Multiplicities do not sum to the stated n, or similar mismatch."""


class InvalidProgression(ValidationError):
    """Progression parameters violate r != s (mod m) or gcd(r,s,m)=1."""


class BudgetError(PartBiasError):
    """A configured computation budget ran out."""


class BudgetExceeded(BudgetError):
    """Enumeration or table cell exceeded its node/state budget."""


class QuadratureNotConverged(BudgetError):
    """Adaptive quadrature did not reach the requested tolerance."""
