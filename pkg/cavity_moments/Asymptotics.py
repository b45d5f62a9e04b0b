"""
Large-n asymptotic coefficients of transmission, delay-time and Selberg-like moments

With ``b = (u - 1)n`` fixed in ratio, the transmission moments expand as
``n^(-1) M_J(k, n) ~ sum_p T_{k,p}(u) n^(-p)``. With ``b = n(w - 1) + 2/beta - 1``
the negative Laguerre moments expand as
``n^(k-1) M_L(-k, n) ~ sum_p D_{k,p}(w) n^(-p)``, and the Selberg-like moments
with ``a = (v - 1)n``, ``b = (u - 1)n`` expand as
``n^(-1) M_J(k, n) ~ sum_p M_{k,p}(u, v) n^(-p)``.

Every coefficient has a closed sum form, used by the public functions, and a
generating-function form reached through the ``*_series`` functions. The
second corrections are known for beta = 1 and beta = 2 only; the beta = 1
transmission correction with ``delta != 0`` is conjectured.
"""

import warnings
from fractions import Fraction
from functools import partial
from multiprocessing import Pool
import platform
from mpmath import mp
from .ExactMath import as_rational, binom_ext, narayana_poly, jacobi_poly
from .Ensembles import SymmetryClass
from .GeneratingFunctions import GenFunId, genfun_eval, moments_to_diff
from .Moments import moment_jacobi, moment_laguerre_neg
from .errors import (UnsupportedOrderError, ParameterDomainError, InternalIdentityViolation,
                     ConjectureWarning)

TRANSMISSION = "Transmission"
DELAY = "Delay"
SELBERG_LIKE = "SelbergLike"

TARGETS = (TRANSMISSION, DELAY, SELBERG_LIKE)

MAX_EXPANSION_ORDER = 2

DEFAULT_DPS = 50

def _check_k(k):
    assert int(k) == k, "moment order must be an integer"
    assert k >= 1, "moment order must be at least 1"
    return int(k)

def _check_p(p, max_order=MAX_EXPANSION_ORDER):
    assert int(p) == p, "expansion order must be an integer"
    if p < 0:
        raise ValueError("expansion order must be non-negative, got {}".format(p))
    if p > max_order:
        raise UnsupportedOrderError("expansion order p = {} is not available (p <= {})".format(p, max_order))
    return int(p)

def _check_beta(beta):
    if beta not in (1, 2, 4):
        raise ValueError("beta must be 1, 2, or 4, got {}".format(beta))
    return int(beta)

def _check_w(w):
    w = as_rational(w)
    if w <= 1:
        raise ParameterDomainError("delay-time coefficients require w > 1, got {}".format(w))
    return w

def _check_u(u):
    u = as_rational(u)
    if u <= 0:
        raise ParameterDomainError("transmission coefficients require u > 0, got {}".format(u))
    return u

def _check_symmetry(symmetry):
    if not isinstance(symmetry, SymmetryClass):
        raise TypeError("a SymmetryClass is required")
    return symmetry

def _jacobi_or_zero(n, alpha, beta, x):
    "Jacobi polynomial, taken to vanish at negative degree"
    if n < 0:
        return Fraction(0)
    return jacobi_poly(n, alpha, beta, x)

def is_conjectured(beta, delta, p):
    """
    Check if a transmission coefficient rests on the conjectured generating function

    Only the beta = 1 second correction with ``delta != 0`` is conjectured.

    :param beta: Dyson index
    :type beta: int
    :param delta: Andreev parameter
    :type delta: int, Fraction or str
    :param p: Expansion order
    :type p: int
    :returns: True if the coefficient is conjectured
    :rtype: bool
    """
    return beta == 1 and as_rational(delta) != 0 and p == 2

# delay times

def _delay_leading(k, w):
    if k == 1:
        return 1/(w - 1)
    return narayana_poly(k - 1, w)/(w - 1)**(2*k - 1)

def _delay_first(beta, k, w):
    total = sum(((binom_ext(2*k, 2*j) - binom_ext(k, j)**2)*w**j for j in range(k + 1)), Fraction(0))
    return (Fraction(2, beta) - 1)*total/(2*(w - 1)**(2*k))

def _delay_second_beta2(k, w):
    w_tilde = (w + 1)/(w - 1)
    return (k + 1)*(k + 2)*w*_jacobi_or_zero(k - 2, 2, 2, w_tilde)/(12*(w - 1)**(k + 3))

def _delay_second_beta1(k, w):
    w_tilde = (w + 1)/(w - 1)
    first = (w + 1)*(k + 3)*_jacobi_or_zero(k - 1, 2, 2, w_tilde)/(4*(w - 1)**(k + 2))
    middle = sum((binom_ext(2*k + 2, 2*j + 1)*w**j for j in range(k + 1)), Fraction(0))
    middle *= Fraction(k, 4)/(w - 1)**(2*k + 1)
    last = ((8*w + 7*w*k - 3*w*w - 3)*(k + 1)*_jacobi_or_zero(k - 2, 2, 2, w_tilde)
            /(12*(w - 1)**(k + 3)))
    return first - middle + last

def delay_coeff(beta, k, p, w):
    """
    Coefficient of the large-n expansion of the negative Laguerre moments

    Returns ``D_{k,p}(w)`` in ``n^(k-1) M_L(-k, n) ~ sum_p D_{k,p}(w) n^(-p)``
    with ``b = n(w - 1) + 2/beta - 1``. The leading coefficient is the same for
    all ``beta``, the first correction is proportional to ``2/beta - 1``, and
    the second correction is available for beta = 1 and beta = 2.

    :param beta: Dyson index, one of 1, 2, or 4
    :type beta: int
    :param k: Order of the negative moment, at least 1
    :type k: int
    :param p: Expansion order, 0, 1, or 2
    :type p: int
    :param w: Scaling parameter, ``w > 1``
    :type w: int, Fraction or str
    :returns: Exact coefficient
    :rtype: Fraction
    """
    beta = _check_beta(beta)
    k = _check_k(k)
    p = _check_p(p)
    w = _check_w(w)

    if p == 0:
        return _delay_leading(k, w)
    elif p == 1:
        return _delay_first(beta, k, w)
    if beta == 2:
        return _delay_second_beta2(k, w)
    elif beta == 1:
        return _delay_second_beta1(k, w)
    raise UnsupportedOrderError("second corrections are not available for beta = 4")

def delay_coeff_series(beta, k, p, w):
    "delay-time coefficient read off the generating function"
    beta = _check_beta(beta)
    k = _check_k(k)
    p = _check_p(p)
    w = _check_w(w)

    if p == 0:
        genfun_id = GenFunId("D0", w=w)
    elif p == 1:
        genfun_id = GenFunId("D1", w=w, beta=beta)
    elif beta == 2:
        genfun_id = GenFunId("D2_beta2", w=w)
    elif beta == 1:
        genfun_id = GenFunId("D2_beta1", w=w)
    else:
        raise UnsupportedOrderError("second corrections are not available for beta = 4")
    return genfun_eval(genfun_id, k + 1)[k]

def laguerre_pos_leading(k, w):
    """
    Leading large-n coefficient of the positive Laguerre moments

    Evaluates the Narayana form ``N_k(w)`` and the form
    ``sum_j C(2j, j) C(k-1, 2j) w^(j+1) (1 + w)^(k-2j-1)/(j + 1)`` and returns
    their common value.

    :param k: Moment order, at least 1
    :type k: int
    :param w: Scaling parameter
    :type w: int, Fraction or str
    :returns: Exact coefficient
    :rtype: Fraction
    """
    k = _check_k(k)
    w = as_rational(w)
    narayana_form = narayana_poly(k, w)
    central_form = Fraction(0)
    for j in range((k - 1)//2 + 1):
        central_form += (binom_ext(2*j, j)*binom_ext(k - 1, 2*j)*w**(j + 1)*(1 + w)**(k - 2*j - 1)
                         /(j + 1))
    if narayana_form != central_form:
        raise InternalIdentityViolation("positive Laguerre leading forms disagree at k = {}, w = {}: {} != {}"
                                        .format(k, w, narayana_form, central_form))
    return narayana_form

# transmission

def trans_leading_alternating(k, u):
    """
    Leading transmission coefficient as a single alternating sum

    ``T_{k,0}(u) = sum_j C(k-1, j) C(2j, j) (-1)^j u^(j+1)/((j + 1)(u + 1)^(2j+1))``,
    an independent route to ``trans_coeff(..., p=0, ...)``.
    """
    k = _check_k(k)
    u = as_rational(u)
    total = Fraction(0)
    for j in range(k):
        total += (binom_ext(k - 1, j)*binom_ext(2*j, j)*(-1)**j*u**(j + 1)
                  /((j + 1)*(u + 1)**(2*j + 1)))
    return total

def trans_first_coeff(symmetry, p, u):
    """
    Coefficient of the expansion of the first transmission moment

    Aomoto's integral gives ``n^(-1) M_J(1, n) = u/(u + 1 + a/n)``, so
    ``T_{1,p} = u (-a)^p/(u + 1)^(p + 1)`` with
    ``a = (2/beta)(1 + delta/2) - 1``.

    :param symmetry: Symmetry class
    :type symmetry: SymmetryClass
    :param p: Expansion order, non-negative
    :type p: int
    :param u: Lead ratio ``m/n``
    :type u: int, Fraction or str
    :returns: Exact coefficient
    :rtype: Fraction
    """
    symmetry = _check_symmetry(symmetry)
    assert int(p) == p and p >= 0, "expansion order must be a non-negative integer"
    u = _check_u(u)
    return u*(-symmetry.a)**int(p)/(u + 1)**(int(p) + 1)

def _trans_diff_leading(k, u):
    total = Fraction(0)
    for j in range(1, k + 1):
        total += binom_ext(k, j)*binom_ext(k, j - 1)*u**(2*j)
    return total/(k*(u + 1)**(2*k + 1))

def _trans_diff_first(symmetry, k, u):
    "first correction as a polynomial in u, finite at u = 1"
    beta = symmetry.beta
    symmetric = (Fraction(2, beta) - 1)*u*(u - 1)**(2*k)
    andreev = Fraction(0)
    for j in range(k + 1):
        andreev += binom_ext(k, j)**2*u**(2*j + 1) - binom_ext(k, j)*binom_ext(k, j + 1)*u**(2*j + 2)
    return (symmetric + symmetry.delta/beta*andreev)/(u + 1)**(2*k + 2)

def trans_diff_first_reflected(symmetry, k, u):
    """
    First correction of the differences through the leading coefficient at -u

    ``u/(u+1)^2 ((u-1)/(u+1))^(2k) (2/beta - 1 + delta(u-1)/(beta u) T_{k+1,0}(-u))``,
    undefined at ``u = 1``.
    """
    symmetry = _check_symmetry(symmetry)
    k = _check_k(k)
    u = _check_u(u)
    if u == 1:
        raise ParameterDomainError("the form through T_{k+1,0}(-u) is singular at u = 1")
    beta = symmetry.beta
    bracket = Fraction(2, beta) - 1 + symmetry.delta*(u - 1)/(beta*u)*trans_leading_alternating(k + 1, -u)
    return u/(u + 1)**2*((u - 1)/(u + 1))**(2*k)*bracket

def beta2_second_order_terms(k, j, u):
    """
    Polynomials in u multiplying 1, delta/2 and (delta/2)^2 in the beta = 2 second correction

    For each summation index ``j`` the second correction of the differences
    collects the term ``C(k, j) C(k, j-1) u^(2k-2j)/(k (u+1)^(2k+3))`` times
    ``A + (delta/2) B + (delta/2)^2 C``; this returns ``(A, B, C)``.

    :param k: Moment order
    :type k: int
    :param j: Summation index
    :type j: int
    :param u: Lead ratio
    :type u: Fraction
    :returns: The three polynomial values
    :rtype: tuple of Fraction
    """
    a_term = (Fraction((j - k)*(j - 1 - k)*(3*j*j - 6*j*k - j + k + 3*k*k - 1), 6)
              + Fraction((j - 1 - k)*(2*j - 1 - 2*k)*(j - k), 3)*u
              - j*(j - 1 - k)*(-j*k + k + 1 + j*j - j)*u**2
              - Fraction(j*(2*j - 1)*(j - 1), 3)*u**3
              + Fraction(j*(j - 1)*(3*j*j - 5*j + 1), 6)*u**4)
    b_term = (u - 1)/2*((j - k)*(j - 1 - k)*(2*j - 1 - 2*k)
                        - j*(2*j - 1)*(j - 1)*u**3
                        + (1 + 2*j)*(j - k)*(j - 1 - k)*u
                        - j*(j - 1)*(2*j - 2*k - 3)*u**2)
    c_term = (Fraction((j - k)*(j - 1 - k), 2)
              + u*(k + 1)*(j - 1 - k)
              + u**2*(j*(k - j + 1) + Fraction(k*(k + 1), 2))
              - j*(k + 1)*u**3
              + Fraction(j*(j - 1), 2)*u**4)
    return a_term, b_term, c_term

def _trans_diff_second_beta2(delta, k, u):
    half_delta = delta/2
    total = Fraction(0)
    for j in range(1, k + 1):
        a_term, b_term, c_term = beta2_second_order_terms(k, j, u)
        total += (binom_ext(k, j)*binom_ext(k, j - 1)*u**(2*k - 2*j)
                  *(a_term + half_delta*b_term + half_delta**2*c_term))
    return total/(k*(u + 1)**(2*k + 3))

def _trans_diff_second_beta1(k, u):
    "Jacobi-polynomial form in u_tilde = (u^2 + 1)/(u^2 - 1); requires u != 1"
    u_tilde = (u*u + 1)/(u*u - 1)

    def p11(m):
        return _jacobi_or_zero(m, 1, 1, u_tilde)

    def p00(m):
        return _jacobi_or_zero(m, 0, 0, u_tilde)

    odd = (Fraction(k + 2, 6)*p11(k) - Fraction(2*(k + 1)*(k + 2), 3)*p00(k)
           - Fraction(k, 6)*p11(k - 2) + Fraction(2*k*(k - 1), 3)*p00(k - 2)
           - Fraction(k*(k + 1), 2)*(u_tilde - 1)**2*u*u*p11(k - 2))
    even = (Fraction(2*(k + 2)*(k + 1), 3)*p11(k - 1) - Fraction(k + 1, 2)*p11(k - 1)
            + 2*k*(k + 1)*p00(k - 1) - Fraction(2*(k - 1)*k, 3)*p11(k - 3))
    total = u*(u*u - 1)**k*odd + u*u*(u*u - 1)**(k - 1)*even
    return total/(u + 1)**(2*k + 3)

def _conjectured_moments(u, delta, order):
    return genfun_eval(GenFunId("T2_beta1_delta_conjectured", u=u, delta=delta), order)

def trans_diff_coeff(symmetry, k, p, u):
    """
    Coefficient of the large-n expansion of the transmission moment differences

    Returns ``Delta T_{k,p} = T_{k,p} - T_{k+1,p}`` for the symmetry class
    ``(beta, delta)`` with ``a = (2/beta)(1 + delta/2) - 1`` and ``b = (u - 1)n``.

    The beta = 1 second correction with ``delta != 0`` is taken from a
    conjectured generating function and issues a ``ConjectureWarning`` (see
    ``is_conjectured``). Second corrections for beta = 4 raise
    ``UnsupportedOrderError``.

    :param symmetry: Symmetry class
    :type symmetry: SymmetryClass
    :param k: Moment order, at least 1
    :type k: int
    :param p: Expansion order, 0, 1, or 2
    :type p: int
    :param u: Lead ratio ``m/n``, positive
    :type u: int, Fraction or str
    :returns: Exact coefficient
    :rtype: Fraction
    """
    symmetry = _check_symmetry(symmetry)
    k = _check_k(k)
    p = _check_p(p)
    u = _check_u(u)

    if p == 0:
        return _trans_diff_leading(k, u)
    elif p == 1:
        return _trans_diff_first(symmetry, k, u)

    beta = symmetry.beta
    if beta == 4:
        raise UnsupportedOrderError("second corrections are not available for beta = 4")
    if beta == 2:
        return _trans_diff_second_beta2(symmetry.delta, k, u)
    if symmetry.delta == 0 and u != 1:
        return _trans_diff_second_beta1(k, u)
    return trans_diff_coeff_series(symmetry, k, p, u)

def trans_diff_coeff_series(symmetry, k, p, u):
    """
    Transmission difference coefficient read off the generating functions

    Uses the difference series where one exists and otherwise converts the
    moment series with ``moments_to_diff``.
    """
    symmetry = _check_symmetry(symmetry)
    k = _check_k(k)
    p = _check_p(p)
    u = _check_u(u)
    beta = symmetry.beta
    delta = symmetry.delta

    if p == 0:
        return genfun_eval(GenFunId("DeltaT0", u=u), k + 1)[k]
    if p == 2 and beta == 4:
        raise UnsupportedOrderError("second corrections are not available for beta = 4")
    if p == 2 and beta == 2:
        return genfun_eval(GenFunId("DeltaT2_beta2_delta", u=u, delta=delta), k + 1)[k]
    if p == 2 and delta == 0:
        return genfun_eval(GenFunId("DeltaT2_beta1_delta0", u=u), k + 1)[k]
    moments = trans_coeff_moment_series(symmetry, p, u, k + 2)
    return moments_to_diff(moments, trans_first_coeff(symmetry, p, u))[k]

def trans_coeff_moment_series(symmetry, p, u, order):
    "series of the transmission coefficients T_{k,p} in s, from the generating functions"
    symmetry = _check_symmetry(symmetry)
    p = _check_p(p)
    u = _check_u(u)
    beta = symmetry.beta
    delta = symmetry.delta

    if p == 0:
        return genfun_eval(GenFunId("T0", u=u), order)
    elif p == 1:
        return genfun_eval(GenFunId("T1", u=u, beta=beta, delta=delta), order)
    elif beta == 2:
        return genfun_eval(GenFunId("T2_beta2_delta", u=u, delta=delta), order)
    elif beta == 4:
        raise UnsupportedOrderError("second corrections are not available for beta = 4")
    elif delta == 0:
        return genfun_eval(GenFunId("T2_beta1_delta0", u=u), order)
    return _conjectured_moments(u, delta, order)

def trans_coeff(symmetry, k, p, u):
    """
    Coefficient of the large-n expansion of the transmission moments

    Assembles ``T_{k,p} = T_{1,p} - sum_{j<k} Delta T_{j,p}``. The leading
    coefficient is also computed from the single-sum form
    ``trans_leading_alternating`` and the two must agree exactly.

    :param symmetry: Symmetry class
    :type symmetry: SymmetryClass
    :param k: Moment order, at least 1
    :type k: int
    :param p: Expansion order, 0, 1, or 2
    :type p: int
    :param u: Lead ratio ``m/n``, positive
    :type u: int, Fraction or str
    :returns: Exact coefficient
    :rtype: Fraction
    """
    symmetry = _check_symmetry(symmetry)
    k = _check_k(k)
    p = _check_p(p)
    u = _check_u(u)

    if p == 2 and symmetry.beta == 4:
        raise UnsupportedOrderError("second corrections are not available for beta = 4")

    if is_conjectured(symmetry.beta, symmetry.delta, p):
        return trans_coeff_moment_series(symmetry, p, u, k + 1)[k]

    value = trans_first_coeff(symmetry, p, u)
    for j in range(1, k):
        value -= trans_diff_coeff(symmetry, j, p, u)

    if p == 0:
        check = trans_leading_alternating(k, u)
        if check != value:
            raise InternalIdentityViolation("leading transmission forms disagree at k = {}, u = {}: {} != {}"
                                            .format(k, u, value, check))
    return value

# Selberg-like integrals

def _check_uv(u, v):
    u = as_rational(u)
    v = as_rational(v)
    if u <= 0 or v <= 0:
        raise ParameterDomainError("Selberg-like coefficients require u, v > 0, got u = {}, v = {}"
                                   .format(u, v))
    return u, v

def _selberg_diff_leading(k, u, v):
    y = u*(u + v - 1)/v
    return v**(k + 1)*narayana_poly(k, y)/(u + v)**(2*k + 1)

def _selberg_first(beta, k, u, v):
    y = u*(u + v - 1)/v
    total = sum(((binom_ext(2*k, 2*j) - binom_ext(k, j)**2)*y**j for j in range(k + 1)), Fraction(0))
    return (Fraction(2, beta) - 1)*v**k*total/(2*(u + v)**(2*k))

def selberg_like_coeff(beta, k, p, u, v):
    """
    Coefficient of the large-n expansion of a Selberg-like moment

    With ``a = (v - 1)n`` and ``b = (u - 1)n`` the Jacobi moments expand as
    ``n^(-1) M_J(k, n) ~ sum_p M_{k,p}(u, v) n^(-p)``. The leading coefficient
    is independent of ``beta`` and the first correction is proportional to
    ``2/beta - 1``.

    :param beta: Dyson index, one of 1, 2, or 4
    :type beta: int
    :param k: Moment order, at least 1
    :type k: int
    :param p: Expansion order, 0 or 1
    :type p: int
    :param u: Scaling of the exponent of ``x``
    :type u: int, Fraction or str
    :param v: Scaling of the exponent of ``(1 - x)``
    :type v: int, Fraction or str
    :returns: Exact coefficient
    :rtype: Fraction
    """
    beta = _check_beta(beta)
    k = _check_k(k)
    p = _check_p(p, 1)
    u, v = _check_uv(u, v)

    if p == 1:
        return _selberg_first(beta, k, u, v)
    value = u/(u + v)
    for j in range(1, k):
        value -= _selberg_diff_leading(j, u, v)
    return value

def selberg_like_diff_coeff(beta, k, p, u, v):
    "difference M_{k,p} - M_{k+1,p} of the Selberg-like coefficients"
    beta = _check_beta(beta)
    k = _check_k(k)
    p = _check_p(p, 1)
    u, v = _check_uv(u, v)

    if p == 0:
        return _selberg_diff_leading(k, u, v)
    return _selberg_first(beta, k, u, v) - _selberg_first(beta, k + 1, u, v)

def selberg_like_coeff_series(k, u, v):
    "leading Selberg-like coefficient read off the quadratic generating function"
    k = _check_k(k)
    u, v = _check_uv(u, v)
    return genfun_eval(GenFunId("SelbergH", u=u, v=v), k + 1)[k]

# remainders

class RemainderRow(dict):
    """
    One row of a remainder scan

    Keys ``'n'``, ``'remainder'`` (exact ``Fraction``), ``'scaled'``
    (``mpmath.mpf``, the remainder times ``n^(p_max + 1)``) and ``'flags'``,
    also readable as attributes.
    """

    def __getattr__(self, name):
        try:
            return self[name]
        except KeyError:
            raise AttributeError(name)

def _highest_order(target, beta):
    "highest expansion order available for a target and symmetry class"
    if target == SELBERG_LIKE or beta == 4:
        return 1
    return 2

def _scan_setup(target, symmetry, k, params):
    "expansion coefficients up to the highest available order for a remainder scan"
    beta = symmetry.beta
    orders = range(_highest_order(target, beta) + 1)
    if target == TRANSMISSION:
        u = _check_u(params["u"])
        return [trans_coeff(symmetry, k, p, u) for p in orders]
    elif target == DELAY:
        w = _check_w(params["w"])
        return [delay_coeff(beta, k, p, w) for p in orders]
    elif target == SELBERG_LIKE:
        u, v = _check_uv(params["u"], params["v"])
        return [selberg_like_coeff(beta, k, p, u, v) for p in orders]
    raise ValueError("unknown remainder target '{}'".format(target))

def _scaled_moment(target, symmetry, k, params, n):
    "finite-n moment with the scaling of the expansion applied"
    beta = symmetry.beta
    if target == TRANSMISSION:
        b = (as_rational(params["u"]) - 1)*n
        result = moment_jacobi(beta, k, n, symmetry.a, b)
        return result.value/n, result.flags
    elif target == DELAY:
        b = n*(as_rational(params["w"]) - 1) + Fraction(2, beta) - 1
        result = moment_laguerre_neg(beta, k, n, b)
        return result.value*Fraction(n)**(k - 1), result.flags
    u = as_rational(params["u"])
    v = as_rational(params["v"])
    result = moment_jacobi(beta, k, n, (v - 1)*n, (u - 1)*n)
    return result.value/n, result.flags

def _remainder_point(target, symmetry, k, params, coefficients, dps, n):
    "remainder of the truncated expansion at a single n"
    value, flags = _scaled_moment(target, symmetry, k, params, n)
    expansion = sum((c/Fraction(n)**p for p, c in enumerate(coefficients)), Fraction(0))
    remainder = value - expansion
    with mp.workdps(dps):
        scaled = mp.mpf(remainder.numerator)/remainder.denominator*mp.mpf(n)**len(coefficients)
    return RemainderRow(n=n, remainder=remainder, scaled=scaled, flags=flags)

def remainder_scan(target, symmetry, k, params, n_list, processes=None, dps=DEFAULT_DPS):
    """
    Remainders of the truncated large-n expansion at a list of channel numbers

    Subtracts all available expansion terms (``p <= 2`` for transmission and
    delay times at beta = 1 and beta = 2, ``p <= 1`` for beta = 4 and for
    Selberg-like moments) from the exact scaled moment. The remainder is
    exact; the scaled remainder multiplies it by ``n^(p_max + 1)`` and is
    converted to ``dps`` decimal digits, so that it stays bounded when the
    expansion is correct.

    Points are evaluated in parallel with ``multiprocessing.Pool`` (serially
    on Windows) and returned in the order of ``n_list``.

    :param target: One of ``'Transmission'``, ``'Delay'``, or ``'SelbergLike'``
    :type target: str
    :param symmetry: Symmetry class
    :type symmetry: SymmetryClass
    :param k: Moment order, at least 1
    :type k: int
    :param params: Scaling parameters, ``{'u': ...}``, ``{'w': ...}`` or
                   ``{'u': ..., 'v': ...}``
    :type params: dict
    :param n_list: Channel numbers to evaluate
    :type n_list: list of int
    :param processes: Number of processes (optional, default is ``None``,
                      which uses the number of CPUs)
    :type processes: int or None
    :param dps: Decimal digits of the scaled remainders (optional, default is
                ``DEFAULT_DPS``)
    :type dps: int
    :returns: One row per channel number
    :rtype: list of RemainderRow
    """
    symmetry = _check_symmetry(symmetry)
    k = _check_k(k)
    if not processes is None:
        processes = int(processes)
        assert processes > 0, "number of processes must be positive"
    n_list = [int(n) for n in n_list]
    assert all(n >= 1 for n in n_list), "channel numbers must be positive integers"

    if target == TRANSMISSION and is_conjectured(symmetry.beta, symmetry.delta, 2):
        warnings.warn("remainders subtract the conjectured second correction", ConjectureWarning)
    coefficients = _scan_setup(target, symmetry, k, params)

    point = partial(_remainder_point, target, symmetry, k, params, coefficients, dps)
    if platform.system() == "Windows" or len(n_list) < 2:
        return [point(n) for n in n_list]
    with Pool(processes) as p:
        return p.map(point, n_list)
