"""
Closed-form generating functions of the asymptotic moment coefficients

Each generating function is evaluated as a truncated ``SeriesQ`` in ``s`` after
substituting rational parameter values. The coefficient of ``s^k`` is the
coefficient of the k-th moment (or moment difference) at the expansion order
named by the family.
"""

import warnings
from fractions import Fraction
from .ExactMath import as_rational
from .PowerSeries import SeriesQ, DEFAULT_ORDER
from .errors import ParameterDomainError, UnsupportedFamilyError, DomainError, ConjectureWarning

FAMILY_PARAMETERS = {
    "NarayanaRho": ("u",),
    "D0": ("w",),
    "T0": ("u",),
    "D1": ("w", "beta"),
    "T1": ("u", "beta", "delta"),
    "D2_beta2": ("w",),
    "T2_beta2_delta": ("u", "delta"),
    "D2_beta1": ("w",),
    "T2_beta1_delta0": ("u",),
    "T2_beta1_delta_conjectured": ("u", "delta"),
    "SelbergH": ("u", "v"),
    "DeltaT0": ("u",),
    "DeltaT2_beta2_delta": ("u", "delta"),
    "DeltaT2_beta1_delta0": ("u",),
    "SelbergDeltaH": ("u", "v"),
    "LemmaF": ("u",),
}

CONJECTURED_FAMILIES = ("T2_beta1_delta_conjectured",)

class GenFunId(object):
    """
    Identifier of a generating function and its parameter values

    The family names the displayed closed form; the parameters needed by each
    family are listed in ``FAMILY_PARAMETERS``. The symmetry index ``beta``
    enters only the first-correction families through the factor
    ``2/beta - 1``.

    :param family: Name of the generating function family
    :type family: str
    :param u: Lead ratio parameter for transmission and Selberg-like families
    :type u: int, Fraction, str or None
    :param v: Second Selberg-like parameter
    :type v: int, Fraction, str or None
    :param w: Delay-time parameter
    :type w: int, Fraction, str or None
    :param beta: Dyson index (1, 2, or 4)
    :type beta: int or None
    :param delta: Andreev parameter
    :type delta: int, Fraction, str or None
    """
    def __init__(self, family, u=None, v=None, w=None, beta=None, delta=None):
        if family not in FAMILY_PARAMETERS:
            raise UnsupportedFamilyError("unknown generating function family '{}'".format(family))
        self.family = family

        given = {"u": u, "v": v, "w": w, "beta": beta, "delta": delta}
        self.params = {}
        for name in FAMILY_PARAMETERS[family]:
            if given[name] is None:
                raise ParameterDomainError("family {} requires parameter '{}'".format(family, name))
            self.params[name] = as_rational(given[name])
        for name, value in given.items():
            if value is not None and name not in FAMILY_PARAMETERS[family]:
                raise ParameterDomainError("family {} does not take parameter '{}'".format(family, name))

        if "beta" in self.params and self.params["beta"] not in (1, 2, 4):
            raise ParameterDomainError("beta must be 1, 2, or 4")
        if "delta" in self.params and self.params["delta"] <= -2:
            raise ParameterDomainError("delta must be larger than -2")
        if "w" in self.params and self.params["w"] <= 1:
            raise ParameterDomainError("delay-time series require w > 1, got {}".format(self.params["w"]))
        for name in ("u", "v"):
            if name in self.params and self.params[name] <= 0:
                raise ParameterDomainError("parameter {} must be positive, got {}".format(name, self.params[name]))

    @property
    def conjecture(self):
        "True if the family is only conjectured"
        return self.family in CONJECTURED_FAMILIES

    def __repr__(self):
        params = ", ".join("{}={}".format(k, v) for k, v in sorted(self.params.items()))
        return "GenFunId('{}', {})".format(self.family, params)

def _s(order):
    return SeriesQ.variable(order)

def _one(order):
    return SeriesQ.constant(1, order)

def _delay_q(w, order):
    "s^2 - 2(w + 1)s + (w - 1)^2"
    s = _s(order)
    return s*s - 2*(w + 1)*s + (w - 1)**2

def _trans_r(u, order):
    "(u + 1)^2 - s(u - 1)^2"
    return (u + 1)**2 - (u - 1)**2*_s(order)

def narayana_rho(u, order=DEFAULT_ORDER):
    """
    Generating function of the Narayana polynomials

    ``rho(u, s) = sum_k N_k(u) s^k``, evaluated from the algebraic closed form
    ``(1 - s(u + 1) - sqrt(1 - 2s + s^2 - 2us - 2us^2 + u^2 s^2))/(2s)``.

    :param u: Evaluation point
    :type u: int, Fraction or str
    :param order: Truncation order (optional, default is ``DEFAULT_ORDER``)
    :type order: int
    :returns: Series in ``s``
    :rtype: SeriesQ
    """
    u = as_rational(u)
    s = _s(order + 1)
    radicand = 1 - 2*s + s*s - 2*u*s - 2*u*s*s + u*u*s*s
    numerator = 1 - (u + 1)*s - radicand.sqrt()
    return numerator.divide_by_s()/2

def _d0(w, order):
    s = _s(order)
    return (w - 1 - s - _delay_q(w, order).sqrt())/2

def _t0(u, order):
    s = _s(order)
    radicand = 1 + Fraction(4)*u/(u + 1)**2*s/(1 - s)
    return (radicand.sqrt() - 1)*(u + 1)/2

def _d1(w, beta, order):
    s = _s(order)
    q = _delay_q(w, order)
    bracket = ((w - 1)**2 - (w + 1)*s)/q - (w - 1)/q.sqrt()
    return (Fraction(2)/beta - 1)/2*bracket

def _t1(u, beta, delta, order):
    s = _s(order)
    r = _trans_r(u, order)
    symmetry_part = (Fraction(2)/beta - 1)*u*s/((s - 1)*r)
    andreev_part = (u + 1)/((1 - s).sqrt()*r.sqrt()) + 1/(s - 1)
    return symmetry_part + delta/(2*beta)*andreev_part

def _d2_beta2(w, order):
    s = _s(order)
    return w*s*s*_delay_q(w, order).power(Fraction(-5, 2))

def _t2_beta2(u, delta, order):
    s = _s(order)
    r = _trans_r(u, order)
    numerator = delta**2*u*s*r - 4*u*u*s*s
    return numerator*(1 - s).power(Fraction(-3, 2))*r.power(Fraction(-5, 2))/4

def _d2_beta1(w, order):
    s = _s(order)
    q = _delay_q(w, order)
    first = s*((w + 1)*s*s - (2*w*w - 3*w + 2)*s + (w - 1)**2*(w + 1))*q.power(Fraction(-5, 2))
    second = s*((w - 1)*s + 1 - w*w)*q.power(-2)
    return first + second

def _t2_beta1(u, order):
    s = _s(order)
    r = _trans_r(u, order)
    numerator = s*s*(u - 1)**2 + 3*u*s - (u + 1)**2
    return -u*s*numerator*r.power(Fraction(-5, 2))*(1 - s).power(Fraction(-3, 2))

def _t2_beta1_conjectured(u, delta, order):
    s = _s(order)
    r = _trans_r(u, order)
    r_squared_inv = r.power(-2)
    result = _t2_beta1(u, order)
    result = result + 3*delta*u*s/(2*(u + 1)**3*(s - 1))
    result = result + delta*s*(r*r + 2*u*delta*r)*r.power(Fraction(-5, 2))*(1 - s).power(Fraction(-3, 2))/2
    result = result + (delta*s*((u + 1)**2*(u*u - 5*u + 1) - s*(u - 1)**2*(u*u - 4*u + 1))
                       *r_squared_inv/(2*(u + 1)*(s - 1)))
    result = result - 3*delta*s*s*s*u*(u - 1)**4*r_squared_inv/(2*(u + 1)**3*(s - 1))
    return result

def _selberg_h(u, v, order):
    s = _s(order)
    denominator = (u + v - (1 + u)*s).inverse()
    source = u*s*denominator
    damping = (1 - s)*denominator
    h = SeriesQ.constant(0, order)
    for _ in range(order):
        h = source - damping*h*h
    return h

def _delta_t0(u, order):
    return narayana_rho(u*u, order).scale(Fraction(1)/(u + 1)**2)/(u + 1)

def _delta_t2_beta2(u, delta, order):
    s = _s(order)
    r = _trans_r(u, order)
    numerator = 4*s*u*u + delta**2*u*(s*(u - 1)**2 - (u + 1)**2)
    return numerator*(1 - s).power(Fraction(-1, 2))*r.power(Fraction(-5, 2))/4 + u*delta**2/(4*(u + 1)**3)

def _delta_t2_beta1(u, order):
    s = _s(order)
    r = _trans_r(u, order)
    numerator = s*s*(u - 1)**2 + 3*u*s - (u + 1)**2
    return u*numerator*r.power(Fraction(-5, 2))*(1 - s).power(Fraction(-1, 2)) + u/(u + 1)**3

def _selberg_delta_h(u, v, order):
    y = u*(u + v - 1)/v
    return narayana_rho(y, order).scale(v/(u + v)**2)*v/(u + v)

def _lemma_f(u, order):
    s = _s(order)
    return u*u*s*(1 - s).power(Fraction(-1, 2))*_trans_r(u, order).power(Fraction(-5, 2))

def genfun_eval(genfun_id, order=DEFAULT_ORDER):
    """
    Evaluate a generating function as a truncated power series

    The returned series has attribute ``conjecture`` set to ``True`` for
    families that are conjectured rather than proven, and evaluating such a
    family issues a ``ConjectureWarning``.

    :param genfun_id: Family and parameter values
    :type genfun_id: GenFunId
    :param order: Truncation order (optional, default is ``DEFAULT_ORDER``)
    :type order: int
    :returns: Series in ``s``
    :rtype: SeriesQ
    """
    if not isinstance(genfun_id, GenFunId):
        raise TypeError("genfun_eval requires a GenFunId")
    assert order >= 1, "series order must be positive"

    family = genfun_id.family
    p = genfun_id.params

    if family == "NarayanaRho":
        result = narayana_rho(p["u"], order)
    elif family == "D0":
        result = _d0(p["w"], order)
    elif family == "T0":
        result = _t0(p["u"], order)
    elif family == "D1":
        result = _d1(p["w"], p["beta"], order)
    elif family == "T1":
        result = _t1(p["u"], p["beta"], p["delta"], order)
    elif family == "D2_beta2":
        result = _d2_beta2(p["w"], order)
    elif family == "T2_beta2_delta":
        result = _t2_beta2(p["u"], p["delta"], order)
    elif family == "D2_beta1":
        result = _d2_beta1(p["w"], order)
    elif family == "T2_beta1_delta0":
        result = _t2_beta1(p["u"], order)
    elif family == "T2_beta1_delta_conjectured":
        warnings.warn("T2_beta1_delta_conjectured is a conjectured generating function",
                      ConjectureWarning)
        result = _t2_beta1_conjectured(p["u"], p["delta"], order)
    elif family == "SelbergH":
        result = _selberg_h(p["u"], p["v"], order)
    elif family == "DeltaT0":
        result = _delta_t0(p["u"], order)
    elif family == "DeltaT2_beta2_delta":
        result = _delta_t2_beta2(p["u"], p["delta"], order)
    elif family == "DeltaT2_beta1_delta0":
        result = _delta_t2_beta1(p["u"], order)
    elif family == "SelbergDeltaH":
        result = _selberg_delta_h(p["u"], p["v"], order)
    else:
        result = _lemma_f(p["u"], order)

    result.conjecture = genfun_id.conjecture
    return result

def diff_to_moments(delta_series, first_moment_coeff):
    """
    Convert a series of moment differences into a series of moments

    Applies ``T(s) = s/(s - 1) (Delta(s) - T_1)``, which encodes
    ``T_k = T_1 - sum_{j<k} Delta_j``.

    :param delta_series: Series of differences with zero constant term
    :type delta_series: SeriesQ
    :param first_moment_coeff: Coefficient of the first moment
    :type first_moment_coeff: int, Fraction or str
    :returns: Series of moments to the same truncation order
    :rtype: SeriesQ
    """
    if delta_series.order > 0 and delta_series[0] != 0:
        raise DomainError("difference series must have zero constant term")
    order = delta_series.order
    s = _s(order)
    factor = -s*(1 - s).inverse()
    return (delta_series - as_rational(first_moment_coeff))*factor

def moments_to_diff(moment_series, first_moment_coeff=None):
    """
    Convert a series of moments into a series of moment differences

    Inverse of ``diff_to_moments``. The first moment coefficient defaults to
    the coefficient of ``s`` in the moment series. One order is lost in the
    division by ``s``.

    :param moment_series: Series of moments with zero constant term
    :type moment_series: SeriesQ
    :param first_moment_coeff: Coefficient of the first moment (optional)
    :type first_moment_coeff: int, Fraction, str or None
    :returns: Series of differences, truncation order reduced by one
    :rtype: SeriesQ
    """
    if moment_series.order > 0 and moment_series[0] != 0:
        raise DomainError("moment series must have zero constant term")
    if first_moment_coeff is None:
        first_moment_coeff = moment_series[1]
    s = _s(moment_series.order)
    return ((s - 1)*moment_series).divide_by_s() + as_rational(first_moment_coeff)
