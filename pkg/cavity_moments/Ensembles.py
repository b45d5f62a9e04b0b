"""
Symmetry classes and the maps from physical settings to ensemble parameters
"""

import warnings
from fractions import Fraction
from .ExactMath import as_rational
from .errors import InvalidSymmetryPair, LeadOrderError, ParameterDomainError, NonPhysicalDeltaWarning

JACOBI_TRANSMISSION = "JacobiTransmission"
LAGUERRE_DELAY = "LaguerreDelay"
SELBERG_LIKE = "SelbergLike"

ENSEMBLE_KINDS = (JACOBI_TRANSMISSION, LAGUERRE_DELAY, SELBERG_LIKE)

PHYSICAL_PAIRS = frozenset([(1, 0), (2, 0), (4, 0), (1, -1), (2, -1), (4, 2), (2, 1)])

class SymmetryClass(object):
    """
    Symmetry class of a chaotic cavity, labelled by the pair (beta, delta)

    ``beta`` is the Dyson index and ``delta`` the Andreev parameter; the three
    Dyson classes have ``delta = 0``. The physical pairs are listed in
    ``PHYSICAL_PAIRS``. With ``strict=False`` any rational ``delta > -2`` is
    accepted (the asymptotic coefficients are analytic in ``delta``), and a
    ``NonPhysicalDeltaWarning`` is issued for pairs outside the physical set.

    :param beta: Dyson index, one of 1, 2, or 4
    :type beta: int
    :param delta: Andreev parameter (optional, default is 0)
    :type delta: int, Fraction or str
    :param strict: Reject non-physical pairs instead of warning (optional,
                   default is ``True``)
    :type strict: bool
    """
    def __init__(self, beta, delta=0, strict=True):
        if beta not in (1, 2, 4):
            raise InvalidSymmetryPair("beta must be 1, 2, or 4, got {}".format(beta))
        delta = as_rational(delta)
        if delta <= -2:
            raise ParameterDomainError("delta must be larger than -2, got {}".format(delta))

        self.beta = int(beta)
        self.delta = delta

        if not self.is_physical:
            if strict:
                raise InvalidSymmetryPair("(beta, delta) = ({}, {}) is not a physical symmetry class"
                                          .format(self.beta, self.delta))
            warnings.warn("(beta, delta) = ({}, {}) is not a physical symmetry class"
                          .format(self.beta, self.delta), NonPhysicalDeltaWarning)

    @property
    def is_physical(self):
        "True if the pair is one of the physical symmetry classes"
        return self.delta.denominator == 1 and (self.beta, int(self.delta)) in PHYSICAL_PAIRS

    @property
    def a(self):
        "Jacobi exponent parameter a = (2/beta)(1 + delta/2) - 1"
        return Fraction(2, self.beta)*(1 + self.delta/2) - 1

    def __eq__(self, other):
        if not isinstance(other, SymmetryClass):
            return NotImplemented
        return self.beta == other.beta and self.delta == other.delta

    def __hash__(self):
        return hash((self.beta, self.delta))

    def __repr__(self):
        return "SymmetryClass(beta={}, delta={})".format(self.beta, self.delta)

class EnsembleParams(object):
    """
    Parameters of a Jacobi, Laguerre or Selberg-like ensemble

    Holds the channel count ``n``, the exponent parameters ``a`` and ``b``
    entering the weights and the scaling parameters ``u``, ``v`` and ``w``.
    Parameters that do not apply to the ensemble kind are ``None``. Instances
    are normally created by ``map_params``.
    """
    def __init__(self, kind, symmetry, n, a=None, b=None, m=None, u=None, v=None, w=None):
        assert kind in ENSEMBLE_KINDS, "unknown ensemble kind '{}'".format(kind)
        self.kind = kind
        self.symmetry = symmetry
        self.n = n
        self.m = m
        self.a = a
        self.b = b
        self.u = u
        self.v = v
        self.w = w

    @property
    def beta(self):
        "Dyson index of the ensemble"
        return self.symmetry.beta

    def as_dict(self):
        "parameters as a dictionary, omitting those that do not apply"
        values = {"kind": self.kind, "beta": self.symmetry.beta, "delta": self.symmetry.delta,
                  "n": self.n, "m": self.m, "a": self.a, "b": self.b,
                  "u": self.u, "v": self.v, "w": self.w}
        return {key: value for key, value in values.items() if value is not None}

    def __repr__(self):
        return "EnsembleParams({})".format(", ".join("{}={}".format(k, v) for k, v in self.as_dict().items()))

def map_params(symmetry, kind, n, m=None, w=2, u=None, v=None):
    """
    Map a physical setting onto ensemble parameters

    For transmission through a cavity with leads of ``n`` and ``m >= n``
    channels, ``a = (2/beta)(1 + delta/2) - 1``, ``b = m - n`` and ``u = m/n``.
    For proper delay times ``b = n(w - 1) + 2/beta - 1``, with ``w = 2`` the
    physical case. For Selberg-like integrals ``a = (v - 1)n`` and
    ``b = (u - 1)n``.

    :param symmetry: Symmetry class
    :type symmetry: SymmetryClass
    :param kind: One of ``'JacobiTransmission'``, ``'LaguerreDelay'``, or
                 ``'SelbergLike'``
    :type kind: str
    :param n: Channel number, a positive integer
    :type n: int
    :param m: Channel number of the second lead (transmission only)
    :type m: int or None
    :param w: Delay-time scaling parameter (optional, default is 2)
    :type w: int, Fraction or str
    :param u: First Selberg-like parameter
    :type u: int, Fraction, str or None
    :param v: Second Selberg-like parameter
    :type v: int, Fraction, str or None
    :returns: Ensemble parameters
    :rtype: EnsembleParams
    """
    if not isinstance(symmetry, SymmetryClass):
        raise TypeError("map_params requires a SymmetryClass")
    assert int(n) == n and n >= 1, "channel number must be a positive integer"
    n = int(n)
    beta = symmetry.beta

    if kind == JACOBI_TRANSMISSION:
        if m is None:
            raise ParameterDomainError("transmission requires the second lead channel number m")
        assert int(m) == m, "channel number m must be an integer"
        m = int(m)
        if m < n:
            raise LeadOrderError("second lead must have at least n = {} channels, got m = {}".format(n, m))
        return EnsembleParams(kind, symmetry, n, a=symmetry.a, b=Fraction(m - n), m=m, u=Fraction(m, n))
    elif kind == LAGUERRE_DELAY:
        w = as_rational(w)
        b = n*(w - 1) + Fraction(2, beta) - 1
        return EnsembleParams(kind, symmetry, n, b=b, w=w)
    elif kind == SELBERG_LIKE:
        if u is None or v is None:
            raise ParameterDomainError("Selberg-like integrals require both u and v")
        u = as_rational(u)
        v = as_rational(v)
        if u < 1 or v < 1:
            raise ParameterDomainError("Selberg-like parameters must satisfy u, v >= 1")
        return EnsembleParams(kind, symmetry, n, a=(v - 1)*n, b=(u - 1)*n, u=u, v=v)
    else:
        raise ValueError("unknown ensemble kind '{}'".format(kind))
