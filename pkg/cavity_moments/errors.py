"""
Exception types raised by ``cavity_moments``

Errors that describe a violated mathematical precondition also derive from
``ValueError``, so code that catches ``ValueError`` continues to work.
"""

class CavityMomentsError(Exception):
    "base class for all errors raised by the package"
    pass

class PoleError(CavityMomentsError, ValueError):
    "a gamma ratio or Pochhammer symbol hit a pole"
    pass

class DomainError(CavityMomentsError, ValueError):
    "an argument lies outside the domain of a special function"
    pass

class NonTerminatingError(CavityMomentsError, ValueError):
    "a hypergeometric series requested in exact arithmetic does not terminate"
    pass

class ParameterDomainError(CavityMomentsError, ValueError):
    "generating function parameters give an ill-posed series"
    pass

class UnsupportedFamilyError(CavityMomentsError, ValueError):
    "unknown generating function family"
    pass

class DivisionByZeroSeries(CavityMomentsError, ZeroDivisionError):
    "division by a power series with vanishing constant term"
    pass

class NotAPerfectSquareConstant(CavityMomentsError, ValueError):
    "square root of a series whose constant term is not a rational square"
    pass

class InvalidSymmetryPair(CavityMomentsError, ValueError):
    "the (beta, delta) pair is not one of the allowed symmetry classes"
    pass

class LeadOrderError(CavityMomentsError, ValueError):
    "the second lead has fewer channels than the first"
    pass

class ValidityRangeError(CavityMomentsError, ValueError):
    "moment order and channel number lie outside the range of the closed form"
    pass

class ParityError(CavityMomentsError, ValueError):
    "closed form requires an even channel number"
    pass

class UnsupportedOrderError(CavityMomentsError, ValueError):
    "no closed form is available for this expansion order and symmetry class"
    pass

class NonNormalizableDensity(CavityMomentsError, ValueError):
    "exponent parameters give a density that cannot be normalized"
    pass

class ConvergenceError(CavityMomentsError, RuntimeError):
    "numerical integration did not reach the error target"
    pass

class InternalIdentityViolation(CavityMomentsError):
    "two independent routes to the same exact quantity disagree"
    pass

class ConjectureWarning(UserWarning):
    "result relies on a conjectured generating function"
    pass

class NonPhysicalDeltaWarning(UserWarning):
    "(beta, delta) pair is not one of the physical symmetry classes"
    pass
