"""
Exact verification of the combinatorial and special-function identities

Each identity is a generator of ``(label, lhs, rhs)`` triples evaluated in exact
rational arithmetic at a fixed set of rational points. ``run_suite`` collects
them into ``IdentityReport`` records. Identities in a parameter (``u``,
``w`` or ``x``) are polynomial or rational in it, so agreement at more points
than a degree bound certifies them; the point sets below are chosen with that
margin for the default orders.
"""

import warnings
from fractions import Fraction
from math import factorial
from .ExactMath import (binom_ext, jacobi_poly, jacobi_recurrence, connection_coeff,
                        hyp2f1_terminating, narayana_poly)
from .PowerSeries import SeriesQ
from .Ensembles import SymmetryClass
from .GeneratingFunctions import GenFunId, genfun_eval, diff_to_moments
from .Asymptotics import (delay_coeff, trans_coeff, trans_diff_coeff,
                          trans_leading_alternating, trans_diff_first_reflected,
                          beta2_second_order_terms, laguerre_pos_leading,
                          selberg_like_coeff, selberg_like_diff_coeff)
from .errors import CavityMomentsError

U_POINTS = [Fraction(3, 2), Fraction(2), Fraction(7, 3), Fraction(3), Fraction(5)]
W_POINTS = [Fraction(3, 2), Fraction(2), Fraction(3), Fraction(7, 2), Fraction(5)]
X_POINTS = [Fraction(-5, 2), Fraction(-1, 3), Fraction(0), Fraction(1, 2), Fraction(2)]
UV_POINTS = [(Fraction(1), Fraction(1)), (Fraction(2), Fraction(1)), (Fraction(3, 2), Fraction(2)),
             (Fraction(3), Fraction(5, 2)), (Fraction(5), Fraction(7, 4))]
DELTA_VALUES = [-1, 0, 1, 2]
PARAMETER_PAIRS = [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)]

class IdentityReport(dict):
    """
    Outcome of checking one identity

    Keys ``'name'``, ``'suite'``, ``'checks'`` (number of evaluated cases),
    ``'failures'`` (list of messages, at most ``MAX_FAILURES`` kept) and
    ``'passed'``. Values are also readable as attributes.
    """

    MAX_FAILURES = 5

    def __getattr__(self, name):
        try:
            return self[name]
        except KeyError:
            raise AttributeError(name)

def _jacobi_or_zero(n, alpha, beta, x):
    return jacobi_poly(n, alpha, beta, x) if n >= 0 else Fraction(0)

def _test_coefficient(i, j):
    "polynomial weight used to exercise the reindexing lemmas"
    return Fraction(i*i + 3*i*j - j + 1)

# coker suite

def coker_first(kmax):
    "Narayana and central-binomial forms of the positive Laguerre leading order"
    for k in range(1, kmax + 1):
        for w in W_POINTS:
            narayana_form = narayana_poly(k, w)
            yield ("k={}, w={}".format(k, w), laguerre_pos_leading(k, w), narayana_form)

def coker_second(kmax):
    "Narayana polynomial at u^2 against the alternating central-binomial sum"
    for k in range(1, kmax + 1):
        for u in U_POINTS:
            lhs = sum((binom_ext(k, j)*binom_ext(k, j - 1)*u**(2*j) for j in range(k + 1)), Fraction(0))/k
            rhs = Fraction(0)
            for j in range(k + 1):
                rhs += (binom_ext(k - 1, j - 1)*binom_ext(2*j, j)*(-1)**(j + 1)*u**(j + 1)
                        *(u + 1)**(2*k - 2*j)/(j + 1))
            yield ("k={}, u={}".format(k, u), lhs, rhs)

def floor_ceiling(kmax):
    "floor/ceiling binomial sum against the leading transmission coefficient"
    for k in range(1, kmax + 1):
        for u in U_POINTS:
            total = sum((binom_ext(k, j//2)*binom_ext(k, (j + 1)//2)*u**j for j in range(2*k + 1)),
                        Fraction(0))
            lhs = u*total/(u + 1)**(2*k + 1)
            yield ("k={}, u={}".format(k, u), lhs, trans_leading_alternating(k + 1, u))

def first_correction_forms(kmax):
    "polynomial and reflected forms of the first correction of the differences"
    classes = [SymmetryClass(1, 0), SymmetryClass(2, 1), SymmetryClass(2, -1), SymmetryClass(4, 2),
               SymmetryClass(1, -1)]
    for k in range(1, kmax + 1):
        for symmetry in classes:
            for u in U_POINTS[:3]:
                yield ("k={}, {}, u={}".format(k, symmetry, u),
                       trans_diff_coeff(symmetry, k, 1, u), trans_diff_first_reflected(symmetry, k, u))

def leading_order_universality(kmax):
    "leading coefficients agree across all symmetry classes"
    classes = [SymmetryClass(beta, delta) for beta, delta in [(1, 0), (2, 0), (4, 0), (1, -1),
                                                                (2, -1), (4, 2), (2, 1)]]
    for k in range(1, kmax + 1):
        for u in U_POINTS[:3]:
            reference = trans_coeff(classes[0], k, 0, u)
            for symmetry in classes[1:]:
                yield ("T k={}, {}, u={}".format(k, symmetry, u), trans_coeff(symmetry, k, 0, u), reference)
        for w in W_POINTS[:3]:
            reference = delay_coeff(1, k, 0, w)
            for beta in (2, 4):
                yield ("D k={}, beta={}, w={}".format(k, beta, w), delay_coeff(beta, k, 0, w), reference)

# chu suite

def _jacobi_kernel(k, j, p):
    return sum((binom_ext(k, j - i)*binom_ext(k, j + i)*i**p for i in range(1, j + 1)), Fraction(0))

def _laguerre_kernel(k, j, p):
    return sum((binom_ext(k + j - i - 1, k - 1)*binom_ext(k + j + i - 1, k - 1)*i**p
                for i in range(1, j + 1)), Fraction(0))

def chu_jacobi(kmax):
    "closed forms of sum_i C(k, j-i) C(k, j+i) i^p for p = 0, 1, 2"
    for k in range(1, kmax + 1):
        for j in range(1, kmax + 1):
            closed = [(binom_ext(2*k, 2*j) - binom_ext(k, j)**2)/2,
                      Fraction(k, 2)*binom_ext(k - 1, j - 1)*binom_ext(k - 1, j),
                      Fraction(k, 4)*binom_ext(2*k - 2, 2*j - 1)]
            for p in range(3):
                yield ("p={}, k={}, j={}".format(p, k, j), _jacobi_kernel(k, j, p), closed[p])

def chu_laguerre(kmax):
    "closed forms of sum_i C(k+j-i-1, k-1) C(k+j+i-1, k-1) i^p for p = 0, 1, 2"
    for k in range(1, kmax + 1):
        for j in range(1, kmax + 1):
            closed = [(binom_ext(2*k + 2*j - 1, 2*k - 1) - binom_ext(k + j - 1, k - 1)**2)/2,
                      Fraction(k, 2)*binom_ext(k + j - 1, k)*binom_ext(k + j, k),
                      Fraction(k, 4)*binom_ext(2*k + 2*j, 2*j - 1)]
            for p in range(3):
                yield ("p={}, k={}, j={}".format(p, k, j), _laguerre_kernel(k, j, p), closed[p])

def jacobi_reindexing(kmax):
    "double sum over C(k, i) C(k, i+2j) rewritten as a sum over the Jacobi kernel"
    for k in range(1, kmax + 1):
        lhs = Fraction(0)
        for j in range(1, k//2 + 1):
            for i in range(k - 2*j + 1):
                lhs += binom_ext(k, i)*binom_ext(k, i + 2*j)*_test_coefficient(i, j)
        rhs = Fraction(0)
        for j in range(1, k):
            for i in range(1, j + 1):
                rhs += binom_ext(k, j - i)*binom_ext(k, i + j)*_test_coefficient(k - i - j, i)
        yield ("k={}".format(k), lhs, rhs)

def laguerre_reindexing(kmax):
    "double series over C(k+i-1, k-1) C(k+2j+i-1, k-1) regrouped by total power of 1/w"
    for k in range(1, kmax + 1):
        for m in range(1, kmax + 1):
            lhs = Fraction(0)
            for j in range(1, m + 1):
                i = m - j
                lhs += binom_ext(k + i - 1, k - 1)*binom_ext(k + 2*j + i - 1, k - 1)*_test_coefficient(i, j)
            rhs = Fraction(0)
            for i in range(1, m + 1):
                rhs += (binom_ext(k + m - i - 1, k - 1)*binom_ext(k + m + i - 1, k - 1)
                        *_test_coefficient(m - i, i))
            yield ("k={}, power={}".format(k, m), lhs, rhs)

# jacobi-poly suite

def jacobi_three_term(kmax):
    "explicit Jacobi polynomials against the three-term recurrence"
    for n in range(kmax + 1):
        for alpha, beta in PARAMETER_PAIRS:
            for x in X_POINTS:
                yield ("n={}, ({}, {}), x={}".format(n, alpha, beta, x),
                       jacobi_poly(n, alpha, beta, x), jacobi_recurrence(n, alpha, beta, x))

def jacobi_connection(kmax):
    "connection formulas raising either Jacobi parameter by p = 1, 2"
    for n in range(min(kmax, 20) + 1):
        for p in (1, 2):
            for alpha, beta in PARAMETER_PAIRS:
                for x in X_POINTS:
                    value = jacobi_poly(n, alpha, beta, x)
                    second = sum((connection_coeff(j, p, n, alpha, beta)*jacobi_poly(n - j, alpha, beta + p, x)
                                  for j in range(min(p, n) + 1)), Fraction(0))
                    first = sum(((-1)**j*connection_coeff(j, p, n, beta, alpha)
                                 *jacobi_poly(n - j, alpha + p, beta, x)
                                 for j in range(min(p, n) + 1)), Fraction(0))
                    label = "n={}, p={}, ({}, {}), x={}".format(n, p, alpha, beta, x)
                    yield (label + ", raise beta", second, value)
                    yield (label + ", raise alpha", first, value)

def _falling_ratio(alpha, m):
    "Gamma(alpha + 1) Gamma(m + 1)/Gamma(m + alpha + 1) for non-negative integers"
    return Fraction(factorial(alpha)*factorial(m), factorial(m + alpha))

def hypergeometric_bridges(kmax):
    "both identities between terminating 2F1 values and Jacobi polynomials"
    points = [Fraction(3), Fraction(-2), Fraction(1, 3), Fraction(5, 2), Fraction(-1, 4)]
    for n in range(1, min(kmax, 15) + 1):
        for alpha, beta in PARAMETER_PAIRS:
            for x in points:
                y = (x + 1)/(x - 1)
                if n >= beta:
                    lhs = hyp2f1_terminating(-n, -n + beta, alpha + 1, x)
                    rhs = _falling_ratio(alpha, n - beta)*(x - 1)**(n - beta)*jacobi_poly(n - beta, beta, alpha, y)
                    yield ("polynomial n={}, ({}, {}), x={}".format(n, alpha, beta, x), lhs, rhs)
                if n >= alpha + 1:
                    # Euler's transformation makes the left side terminate
                    z = 1/x
                    lhs = (1 - z)**(alpha + 1 - 2*n - beta)*hyp2f1_terminating(alpha + 1 - n, alpha + 1 - n - beta,
                                                                               alpha + 1, z)
                    rhs = ((x/(x - 1))**(beta + n)*Fraction(factorial(alpha)*factorial(n - alpha - 1),
                                                             factorial(n - 1))
                           *jacobi_poly(n - alpha - 1, alpha, beta, y))
                    yield ("reciprocal n={}, ({}, {}), x={}".format(n, alpha, beta, x), lhs, rhs)

# genfun-duality suite

def _series_coefficients(family, order, **params):
    return genfun_eval(GenFunId(family, **params), order)

def delay_duality(kmax):
    "delay-time generating functions against the coefficient formulas"
    for w in W_POINTS[:3]:
        d0 = _series_coefficients("D0", kmax + 1, w=w)
        d1 = {beta: _series_coefficients("D1", kmax + 1, w=w, beta=beta) for beta in (1, 2, 4)}
        d2 = {2: _series_coefficients("D2_beta2", kmax + 1, w=w),
              1: _series_coefficients("D2_beta1", kmax + 1, w=w)}
        for k in range(1, kmax + 1):
            yield ("D0 k={}, w={}".format(k, w), d0[k], delay_coeff(2, k, 0, w))
            for beta in (1, 2, 4):
                yield ("D1 k={}, beta={}, w={}".format(k, beta, w), d1[beta][k], delay_coeff(beta, k, 1, w))
            for beta in (1, 2):
                yield ("D2 k={}, beta={}, w={}".format(k, beta, w), d2[beta][k], delay_coeff(beta, k, 2, w))

def transmission_duality(kmax):
    "transmission generating functions against the difference assembly"
    for u in U_POINTS[:3]:
        t0 = _series_coefficients("T0", kmax + 1, u=u)
        dt0 = _series_coefficients("DeltaT0", kmax + 1, u=u)
        t2_beta1 = _series_coefficients("T2_beta1_delta0", kmax + 1, u=u)
        dt2_beta1 = _series_coefficients("DeltaT2_beta1_delta0", kmax + 1, u=u)
        orthogonal = SymmetryClass(1, 0)
        for k in range(1, kmax + 1):
            yield ("T0 k={}, u={}".format(k, u), t0[k], trans_coeff(orthogonal, k, 0, u))
            yield ("DeltaT0 k={}, u={}".format(k, u), dt0[k], trans_diff_coeff(orthogonal, k, 0, u))
            yield ("T2 beta=1 k={}, u={}".format(k, u), t2_beta1[k], trans_coeff(orthogonal, k, 2, u))
            yield ("DeltaT2 beta=1 k={}, u={}".format(k, u), dt2_beta1[k], trans_diff_coeff(orthogonal, k, 2, u))
        for beta, delta in [(1, 0), (2, 0), (4, 0), (1, -1), (2, -1), (4, 2), (2, 1)]:
            symmetry = SymmetryClass(beta, delta)
            t1 = _series_coefficients("T1", kmax + 1, u=u, beta=beta, delta=delta)
            for k in range(1, kmax + 1):
                yield ("T1 k={}, {}, u={}".format(k, symmetry, u), t1[k], trans_coeff(symmetry, k, 1, u))
        for delta in DELTA_VALUES:
            symmetry = SymmetryClass(2, delta, strict=False)
            t2 = _series_coefficients("T2_beta2_delta", kmax + 1, u=u, delta=delta)
            dt2 = _series_coefficients("DeltaT2_beta2_delta", kmax + 1, u=u, delta=delta)
            for k in range(1, kmax + 1):
                label = "k={}, delta={}, u={}".format(k, delta, u)
                yield ("T2 beta=2 " + label, t2[k], trans_coeff(symmetry, k, 2, u))
                yield ("DeltaT2 beta=2 " + label, dt2[k], trans_diff_coeff(symmetry, k, 2, u))

def leading_difference_transform(kmax):
    "leading differences mapped to moments with the first coefficient u/(u + 1)"
    for u in U_POINTS:
        differences = _series_coefficients("DeltaT0", kmax + 1, u=u)
        moments = diff_to_moments(differences, u/(u + 1))
        direct = _series_coefficients("T0", kmax + 1, u=u)
        for k in range(1, kmax + 1):
            yield ("k={}, u={}".format(k, u), moments[k], direct[k])

def taylor_lemma(kmax):
    "coefficient form of the Taylor series of u^2 s (1-s)^(-1/2) ((u+1)^2 - s(u-1)^2)^(-5/2)"
    for u in U_POINTS:
        series = _series_coefficients("LemmaF", kmax + 1, u=u)
        u_tilde = (u*u + 1)/(u*u - 1)
        for k in range(1, kmax + 1):
            inner = ((1 - u*u)*(_jacobi_or_zero(k - 1, 1, 1, u_tilde)/(6*k)
                                - Fraction(2, 3)*_jacobi_or_zero(k - 1, 0, 0, u_tilde))
                     - Fraction(2, 3)*u*_jacobi_or_zero(k - 2, 1, 1, u_tilde))
            closed = u*u*k*(k + 1)*(u - 1)**(k - 2)/(u + 1)**(k + 5)*inner
            yield ("k={}, u={}".format(k, u), series[k], closed)

# second-order suite

def second_order_fixture(kmax):
    "explicit beta = 2 second-correction polynomials against the difference series"
    for u in U_POINTS[:3]:
        for delta in DELTA_VALUES:
            series = _series_coefficients("DeltaT2_beta2_delta", kmax + 1, u=u, delta=delta)
            for k in range(1, kmax + 1):
                total = Fraction(0)
                for j in range(1, k + 1):
                    a_term, b_term, c_term = beta2_second_order_terms(k, j, u)
                    total += (binom_ext(k, j)*binom_ext(k, j - 1)*u**(2*k - 2*j)
                              *(a_term + Fraction(delta, 2)*b_term + Fraction(delta, 2)**2*c_term))
                yield ("k={}, delta={}, u={}".format(k, delta, u), total/(k*(u + 1)**(2*k + 3)), series[k])

def second_order_linear_part(kmax):
    "the part of the beta = 2 second correction linear in delta vanishes"
    for u in U_POINTS:
        for k in range(1, kmax + 1):
            total = Fraction(0)
            for j in range(1, k + 1):
                b_term = beta2_second_order_terms(k, j, u)[1]
                total += binom_ext(k, j)*binom_ext(k, j - 1)*u**(2*k - 2*j)*b_term
            yield ("k={}, u={}".format(k, u), total, Fraction(0))

def second_order_delta_split(kmax):
    "beta = 2 second-correction moments are even and quadratic in delta"
    for u in U_POINTS[:3]:
        series = {delta: _series_coefficients("T2_beta2_delta", kmax + 1, u=u, delta=delta)
                  for delta in DELTA_VALUES}
        for k in range(1, kmax + 1):
            yield ("even k={}, u={}".format(k, u), series[1][k], series[-1][k])
            yield ("quadratic k={}, u={}".format(k, u), series[2][k] - series[0][k],
                   4*(series[1][k] - series[0][k]))

# recurrence suite

def delay_second_recurrence(kmax):
    "three-term recurrence of the beta = 2 second-correction delay coefficients"
    for w in W_POINTS:
        values = [Fraction(0)] + [delay_coeff(2, k, 2, w) for k in range(1, kmax + 1)]
        for k in range(2, kmax + 1):
            lhs = (w - 1)**2*(k - 2)*values[k] - (w + 1)*(2*k - 1)*values[k - 1] + (k + 1)*values[k - 2]
            yield ("k={}, w={}".format(k, w), lhs, Fraction(0))

# selberg suite

def selberg_quadratic(kmax):
    "the Selberg-like generating function solves its quadratic equation"
    order = max(kmax, 32)
    for u, v in UV_POINTS:
        h = _series_coefficients("SelbergH", order, u=u, v=v)
        s = SeriesQ.variable(order)
        denominator = (u + v - (1 + u)*s).inverse()
        residual = h - (u*s*denominator - (1 - s)*denominator*h*h)
        yield ("u={}, v={}".format(u, v), residual, SeriesQ.constant(0, order))

def selberg_duality(kmax):
    "Selberg-like coefficients against the quadratic and Narayana generating functions"
    for u, v in UV_POINTS:
        h = _series_coefficients("SelbergH", kmax + 1, u=u, v=v)
        delta_h = _series_coefficients("SelbergDeltaH", kmax + 1, u=u, v=v)
        assembled = diff_to_moments(delta_h, u/(u + v))
        for k in range(1, kmax + 1):
            label = "k={}, u={}, v={}".format(k, u, v)
            yield ("H " + label, h[k], selberg_like_coeff(2, k, 0, u, v))
            yield ("Delta H " + label, delta_h[k], selberg_like_diff_coeff(2, k, 0, u, v))
            yield ("assembled " + label, assembled[k], h[k])

def selberg_first_correction(kmax):
    "Selberg-like first correction vanishes at beta = 2 and scales with 2/beta - 1"
    for u, v in UV_POINTS:
        for k in range(1, kmax + 1):
            label = "k={}, u={}, v={}".format(k, u, v)
            yield ("beta=2 " + label, selberg_like_coeff(2, k, 1, u, v), Fraction(0))
            yield ("beta=4 " + label, -2*selberg_like_coeff(4, k, 1, u, v), selberg_like_coeff(1, k, 1, u, v))

SUITES = {
    "coker": [("coker_first", coker_first, 30), ("coker_second", coker_second, 30),
              ("floor_ceiling", floor_ceiling, 25), ("first_correction_forms", first_correction_forms, 15),
              ("leading_order_universality", leading_order_universality, 10)],
    "chu": [("chu_jacobi", chu_jacobi, 30), ("chu_laguerre", chu_laguerre, 30),
            ("jacobi_reindexing", jacobi_reindexing, 30), ("laguerre_reindexing", laguerre_reindexing, 30)],
    "jacobi-poly": [("jacobi_three_term", jacobi_three_term, 30), ("jacobi_connection", jacobi_connection, 20),
                    ("hypergeometric_bridges", hypergeometric_bridges, 15)],
    "genfun-duality": [("delay_duality", delay_duality, 20), ("transmission_duality", transmission_duality, 20),
                       ("leading_difference_transform", leading_difference_transform, 15),
                       ("taylor_lemma", taylor_lemma, 20)],
    "second-order": [("second_order_fixture", second_order_fixture, 12),
                   ("second_order_linear_part", second_order_linear_part, 12),
                   ("second_order_delta_split", second_order_delta_split, 15)],
    "recurrence": [("delay_second_recurrence", delay_second_recurrence, 30)],
    "selberg": [("selberg_quadratic", selberg_quadratic, 32), ("selberg_duality", selberg_duality, 20),
                ("selberg_first_correction", selberg_first_correction, 20)],
}

# names accepted in place of a suite name
SUITE_ALIASES = {"appendix-d": "second-order"}

SUITE_NAMES = tuple(SUITES) + tuple(SUITE_ALIASES) + ("all",)

def check_identity(name, suite, identity, kmax):
    """
    Evaluate a single identity and report the outcome

    Errors raised by the package while evaluating a case count as failures.

    :param name: Name of the identity
    :type name: str
    :param suite: Name of the suite it belongs to
    :type suite: str
    :param identity: Generator function yielding ``(label, lhs, rhs)``
    :type identity: callable
    :param kmax: Largest order passed to the generator
    :type kmax: int
    :returns: Report for the identity
    :rtype: IdentityReport
    """
    checks = 0
    failures = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        try:
            for label, lhs, rhs in identity(kmax):
                checks += 1
                if lhs != rhs:
                    failures.append("{}: {} != {}".format(label, lhs, rhs))
        except CavityMomentsError as error:
            failures.append("{}: {}".format(type(error).__name__, error))
    return IdentityReport(name=name, suite=suite, checks=checks, passed=not failures,
                          failures=failures[:IdentityReport.MAX_FAILURES])

def run_suite(name, kmax=None):
    """
    Run a named suite of identities

    Each identity has a default largest order; ``kmax`` overrides it for
    every identity in the suite. The suite ``'all'`` runs every suite.

    :param name: Suite name, one of ``SUITE_NAMES``
    :type name: str
    :param kmax: Largest order to check (optional, default is ``None``, which
                 uses the default of each identity)
    :type kmax: int or None
    :returns: One report per identity
    :rtype: list of IdentityReport
    """
    if name not in SUITE_NAMES:
        raise ValueError("unknown identity suite '{}', expected one of {}".format(name, ", ".join(SUITE_NAMES)))
    if not kmax is None:
        kmax = int(kmax)
        assert kmax > 0, "kmax must be a positive integer"

    suites = list(SUITES) if name == "all" else [SUITE_ALIASES.get(name, name)]
    reports = []
    for suite in suites:
        for identity_name, identity, default_kmax in SUITES[suite]:
            reports.append(check_identity(identity_name, suite, identity,
                                          default_kmax if kmax is None else kmax))
    return reports
