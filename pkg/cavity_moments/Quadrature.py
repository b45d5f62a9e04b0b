"""
Quadrature oracles for the Jacobi and Laguerre joint densities and their large-n limits

The finite-n moments are integrated over the ordered chamber
``0 < x_1 < ... < x_n`` with a product tanh-sinh rule and normalized by the
Selberg (Jacobi) or Laguerre constant. The limiting densities are integrated
with ``mpmath.quad``.
"""

from math import factorial
import numpy as np
from scipy.special import expit, log_expit
from mpmath import mp
from .ExactMath import as_rational
from .Moments import selberg_constant, laguerre_constant
from .errors import ConvergenceError, NonNormalizableDensity, ValidityRangeError, ParameterDomainError

JACOBI = "Jacobi"
LAGUERRE = "Laguerre"

MARCHENKO_PASTUR = "MarchenkoPastur"
JACOBI_LIMIT = "JacobiLimit"

MAX_QUADRATURE_DIMENSION = 3
DEFAULT_TOLERANCE = 1.e-12
LIMIT_TOLERANCE = 1.e-10
T_MAX = 4.5
MAX_LEVEL = 5

def _tanh_sinh_nodes(h):
    """
    Tanh-sinh nodes on (0, 1) with mesh spacing ``h``

    Returns ``s``, ``1 - s`` and the logarithms of ``s``, ``1 - s`` and the
    weights. The map ``s = expit(pi sinh(t))`` keeps both ``s`` and ``1 - s``
    accurate near the endpoints.
    """
    count = int(round(T_MAX/h))
    t = h*np.arange(-count, count + 1)
    z = np.pi*np.sinh(t)
    log_s = log_expit(z)
    log_one_minus = log_expit(-z)
    log_weights = np.log(h*np.pi*np.cosh(t)) + log_s + log_one_minus
    return expit(z), expit(-z), log_s, log_one_minus, log_weights

def _chamber_coordinates(s, one_minus_s, log_one_minus_s):
    """
    Map points of the unit cube to the ordered chamber of (0, 1)

    ``x_i = x_(i-1) + (1 - x_(i-1)) s_i``. Returns the positions, the gaps
    ``x_i - x_(i-1)`` (with ``x_0 = 0``), ``log(1 - x_i)`` and the log-Jacobian.
    """
    positions = []
    gaps = []
    log_complements = []
    log_jacobian = 0.
    complement = 1.
    log_complement = 0.
    position = 0.
    for s_i, one_minus_i, log_one_minus_i in zip(s, one_minus_s, log_one_minus_s):
        gap = complement*s_i
        log_jacobian = log_jacobian + log_complement
        position = position + gap
        complement = complement*one_minus_i
        log_complement = log_complement + log_one_minus_i
        positions.append(position)
        gaps.append(gap)
        log_complements.append(log_complement)
    return positions, gaps, log_complements, log_jacobian

def _log_vandermonde(values, gaps, beta, laguerre):
    "beta times the log of the Vandermonde product over the chamber"
    n = len(gaps)
    total = 0.
    for i in range(n):
        difference = 0.
        for j in range(i + 1, n):
            difference = difference + gaps[j]
            if laguerre:
                # t_j - t_i scaled to x_j - x_i = (t_j - t_i)/((1 - t_i)(1 - t_j))
                total = total + beta*(np.log(difference) - values[i] - values[j])
            else:
                total = total + beta*np.log(difference)
    return total

def _level_sum(kind, beta, k, n, exponent_a, exponent_b, h):
    "unnormalized chamber integral of the power sum at mesh spacing h"
    s, one_minus_s, log_s, log_one_minus_s, log_weights = _tanh_sinh_nodes(h)
    count = len(s)

    if n == 1:
        blocks = [(np.arange(count),)]
    else:
        inner = [index.ravel() for index in np.meshgrid(*([np.arange(count)]*(n - 1)), indexing="ij")]
        blocks = (tuple([first] + inner) for first in range(count))

    total = 0.
    for indices in blocks:
        positions, gaps, log_complements, log_jacobian = _chamber_coordinates(
            [s[i] for i in indices], [one_minus_s[i] for i in indices], [log_one_minus_s[i] for i in indices])
        log_density = log_jacobian + sum(log_weights[i] for i in indices)
        log_positions = [np.log(p) for p in positions]

        if kind == JACOBI:
            for log_x, log_1mx in zip(log_positions, log_complements):
                log_density = log_density + exponent_b*log_x + exponent_a*log_1mx
            log_density = log_density + _log_vandermonde(None, gaps, beta, False)
            log_values = log_positions
        else:
            # x = t/(1 - t), dx = dt/(1 - t)^2
            log_values = [log_t - log_1mt for log_t, log_1mt in zip(log_positions, log_complements)]
            for log_x, log_1mt in zip(log_values, log_complements):
                log_density = log_density + exponent_b*log_x - beta/2.*np.exp(log_x) - 2.*log_1mt
            log_density = log_density + _log_vandermonde(log_complements, gaps, beta, True)

        for log_x in log_values:
            total += np.sum(np.exp(log_density + k*log_x))
    return total

def _exponents(kind, beta, a, b):
    "weight exponents of x and (1 - x), rejecting non-normalizable densities"
    half = beta/2.
    exponent_b = half*(float(b) + 1.) - 1.
    if exponent_b <= -1.:
        raise NonNormalizableDensity("weight x^{} is not integrable at 0".format(exponent_b))
    exponent_a = None
    if kind == JACOBI:
        exponent_a = half*(float(a) + 1.) - 1.
        if exponent_a <= -1.:
            raise NonNormalizableDensity("weight (1 - x)^{} is not integrable at 1".format(exponent_a))
    return exponent_a, exponent_b

def quadrature_moment(kind, beta, k, n, a=0, b=0, tol=DEFAULT_TOLERANCE, verbose=False):
    """
    Moment of the Jacobi or Laguerre ensemble by direct quadrature

    Integrates ``sum_j x_j^k`` against the joint density for ``n <= 3``. The
    integral runs over the ordered chamber, mapped from the unit cube, with a
    tanh-sinh product rule whose mesh spacing is halved from 1/2 until two
    successive levels agree to ``tol``. The Laguerre half-line is mapped to
    (0, 1) by ``x = t/(1 - t)``. Negative ``k`` are allowed where the moment is
    finite.

    :param kind: ``'Jacobi'`` or ``'Laguerre'``
    :type kind: str
    :param beta: Dyson index
    :type beta: int
    :param k: Signed moment order
    :type k: int
    :param n: Number of eigenvalues, 1, 2, or 3
    :type n: int
    :param a: Exponent parameter of ``(1 - x)`` (Jacobi only, optional,
              default is 0)
    :type a: int, Fraction or str
    :param b: Exponent parameter of ``x`` (optional, default is 0)
    :type b: int, Fraction or str
    :param tol: Absolute error target (optional, default is
                ``DEFAULT_TOLERANCE``)
    :type tol: float
    :param verbose: Print the estimate at each level (optional, default is
                    ``False``)
    :type verbose: bool
    :returns: Normalized moment
    :rtype: float
    """
    if kind not in (JACOBI, LAGUERRE):
        raise ValueError("unknown ensemble kind '{}'".format(kind))
    assert int(n) == n and 1 <= n <= MAX_QUADRATURE_DIMENSION, "quadrature supports 1 <= n <= 3"
    assert int(k) == k, "moment order must be an integer"
    n = int(n)
    k = int(k)
    a = as_rational(a)
    b = as_rational(b)
    exponent_a, exponent_b = _exponents(kind, beta, a, b)
    if exponent_b + k <= -1.:
        raise ValidityRangeError("moment of order {} is infinite for these parameters".format(k))

    if kind == JACOBI:
        normalization = float(selberg_constant(beta, a, b, n))
    else:
        normalization = float(laguerre_constant(beta, b, n))

    estimates = []
    for level in range(1, MAX_LEVEL + 1):
        h = 0.5**level
        value = factorial(n)*_level_sum(kind, beta, k, n, exponent_a, exponent_b, h)/normalization
        estimates.append(value)
        if verbose:
            print("level {}: h = {}, estimate = {:.16g}".format(level, h, value))
        if len(estimates) >= 3:
            change = abs(estimates[-1] - estimates[-2])
            previous = abs(estimates[-2] - estimates[-3])
            if change <= tol or (previous > 0. and change**2/previous <= tol and change < previous):
                return value

    raise ConvergenceError("tanh-sinh quadrature did not reach the error target {} (last change {})"
                           .format(tol, abs(estimates[-1] - estimates[-2])))

class SupportInterval(object):
    "support [lower, upper] of a limiting density"
    def __init__(self, lower, upper):
        assert lower < upper, "support must have positive length"
        self.lower = float(lower)
        self.upper = float(upper)

    def __contains__(self, x):
        return self.lower <= x <= self.upper

    def __repr__(self):
        return "SupportInterval(lower={}, upper={})".format(self.lower, self.upper)

def marchenko_pastur_support(w):
    "support ((sqrt(w) - 1)^2, (sqrt(w) + 1)^2) of the Marchenko-Pastur law"
    w = as_rational(w)
    if w <= 1:
        raise ParameterDomainError("the Marchenko-Pastur law requires w > 1, got {}".format(w))
    root = np.sqrt(float(w))
    return SupportInterval((root - 1.)**2, (root + 1.)**2)

def jacobi_limit_support(u, v):
    """
    Support of the limiting Jacobi density for ``a = (v - 1)n``, ``b = (u - 1)n``

    :param u: Scaling of the exponent of ``x``
    :type u: int, Fraction or str
    :param v: Scaling of the exponent of ``(1 - x)``
    :type v: int, Fraction or str
    :returns: Support of the density
    :rtype: SupportInterval
    """
    u = as_rational(u)
    v = as_rational(v)
    if u < 1 or v < 1:
        raise ParameterDomainError("the limiting Jacobi density requires u, v >= 1")
    total = float(u + v)
    first = np.sqrt(float(u)/total*(1. - 1./total))
    second = np.sqrt(1./total*(1. - float(u)/total))
    return SupportInterval(max((first - second)**2, 0.), min((first + second)**2, 1.))

def _density_function(kind, w=None, u=None, v=None):
    "support and mpmath density function of a limiting law"
    if kind == MARCHENKO_PASTUR:
        support = marchenko_pastur_support(w)
        lower, upper = mp.mpf(support.lower), mp.mpf(support.upper)
        return support, lambda x: mp.sqrt((x - lower)*(upper - x))/(2*mp.pi*x)
    elif kind == JACOBI_LIMIT:
        support = jacobi_limit_support(u, v)
        lower, upper = mp.mpf(support.lower), mp.mpf(support.upper)
        scale = mp.mpf(float(as_rational(u) + as_rational(v)))
        return support, lambda x: scale*mp.sqrt((x - lower)*(upper - x))/(2*mp.pi*x*(1 - x))
    raise ValueError("unknown limiting density '{}'".format(kind))

def limiting_density(kind, x, w=None, u=None, v=None):
    """
    Value of a limiting eigenvalue density

    ``'MarchenkoPastur'`` is the large-n density of the Laguerre eigenvalues
    divided by ``n`` with ``b = n(w - 1)``; ``'JacobiLimit'`` is the large-n
    Jacobi density with ``a = (v - 1)n`` and ``b = (u - 1)n``. Both vanish
    outside their support.

    :param kind: ``'MarchenkoPastur'`` or ``'JacobiLimit'``
    :type kind: str
    :param x: Evaluation point
    :type x: float
    :param w: Delay-time scaling parameter (Marchenko-Pastur)
    :type w: int, Fraction, str or None
    :param u: First Selberg-like parameter (Jacobi limit)
    :type u: int, Fraction, str or None
    :param v: Second Selberg-like parameter (Jacobi limit)
    :type v: int, Fraction, str or None
    :returns: Density value
    :rtype: float
    """
    support, density = _density_function(kind, w, u, v)
    if x <= support.lower or x >= support.upper:
        return 0.
    with mp.workdps(30):
        return float(density(mp.mpf(x)))

def limiting_moment(kind, k, w=None, u=None, v=None, tol=LIMIT_TOLERANCE):
    """
    Moment of a limiting density by tanh-sinh quadrature

    For ``'MarchenkoPastur'`` returns the integral of ``x^k`` (negative ``k``
    allowed); for ``'JacobiLimit'`` returns the integral of ``x^k (1 - x)``,
    the limit of the scaled moment differences.

    :param kind: ``'MarchenkoPastur'`` or ``'JacobiLimit'``
    :type kind: str
    :param k: Moment order
    :type k: int
    :param w: Delay-time scaling parameter (Marchenko-Pastur)
    :type w: int, Fraction, str or None
    :param u: First Selberg-like parameter (Jacobi limit)
    :type u: int, Fraction, str or None
    :param v: Second Selberg-like parameter (Jacobi limit)
    :type v: int, Fraction, str or None
    :param tol: Error target (optional, default is ``LIMIT_TOLERANCE``)
    :type tol: float
    :returns: Moment of the density
    :rtype: float
    """
    assert int(k) == k, "moment order must be an integer"
    k = int(k)
    if kind == JACOBI_LIMIT and k < 1:
        raise ValidityRangeError("Jacobi limit moments require k >= 1, got {}".format(k))
    support, density = _density_function(kind, w, u, v)

    with mp.workdps(30):
        if kind == MARCHENKO_PASTUR:
            integrand = lambda x: x**k*density(x)
        else:
            integrand = lambda x: x**k*(1 - x)*density(x)
        value, error = mp.quad(integrand, [mp.mpf(support.lower), mp.mpf(support.upper)], error=True)
        if error > tol:
            raise ConvergenceError("limiting moment quadrature error {} exceeds {}".format(error, tol))
        return float(value)
