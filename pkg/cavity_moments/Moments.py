"""
Exact finite-n moments of the Jacobi and Laguerre beta-ensembles

The Jacobi ensemble has weight ``x^(beta/2 (b+1) - 1) (1-x)^(beta/2 (a+1) - 1)``
on ``[0, 1]`` and the Laguerre ensemble has weight
``x^(beta/2 (b+1) - 1) exp(-beta x/2)`` on ``(0, inf)``, both with the
Vandermonde factor ``|Delta(x)|^beta``. The moments returned are
``<sum_j x_j^k>`` (Jacobi, ``k >= 1``) and ``<sum_j x_j^(-k)>`` (Laguerre,
``k >= 1``) as exact rationals.

The beta = 2 closed forms are the base case: the beta = 1 and beta = 4 formulas
call them at shifted arguments and add finite correction sums. Negative
Laguerre moments can also be obtained from the integration-by-parts relations
between joint moments, which is how the beta = 1 values are computed by default.
"""

from fractions import Fraction
from math import factorial
from mpmath import mp
from .ExactMath import as_rational, binom_ext, pochhammer, rising_reciprocal, narayana
from .Ensembles import SymmetryClass, map_params, SELBERG_LIKE
from .errors import ValidityRangeError, ParityError, DomainError, PoleError

OMITTED_PHI_TERM = "OMITTED_PHI_TERM"

CLOSED_FORM = "closed-form"
LOOP_EQUATIONS = "loop-equations"

class MomentResult(dict):
    """
    Exact moment value with provenance

    Dictionary-like object with keys ``'value'`` (the exact moment),
    ``'formula'`` (identifier of the closed form used) and ``'flags'`` (a
    ``frozenset`` of approximation flags, empty for exact results). Values can
    also be read as attributes, e.g. ``result.value``.

    :ivar value: Exact moment
    :type value: Fraction
    :ivar formula: Identifier of the closed form
    :type formula: str
    :ivar flags: Approximation flags such as ``OMITTED_PHI_TERM``
    :type flags: frozenset
    """

    def __getattr__(self, name):
        try:
            return self[name]
        except KeyError:
            raise AttributeError(name)

    __setattr__ = dict.__setitem__
    __delattr__ = dict.__delitem__

def _moment_result(value, formula, flags=()):
    return MomentResult(value=value, formula=formula, flags=frozenset(flags))

def _check_order(k):
    assert int(k) == k, "moment order must be an integer"
    if k < 1:
        raise ValidityRangeError("moment order k must be at least 1, got {}".format(k))

def _aomoto(n, a, b):
    "first Jacobi moment, valid for every beta"
    if n == 0:
        return Fraction(0)
    return n*(b + n)/(a + b + 2*n)

def _u_factors(n, k, j, a, b):
    "linear factor and Pochhammer factors (base, index) of one beta = 2 difference term"
    linear = a + b + 2*n - 2*j + k + 1
    numerator = [(a + b + n, k - j + 1), (a + n - j + 1, j), (b + n, k - j + 1)]
    denominator = [(a + b + 2*n - j, k + 2), (a + b + 2*n - j + 1, k), (n + 1, -j)]
    return linear, numerator, denominator

def leading_n_power(k, j):
    """
    Power of n that dominates one term of the beta = 2 difference formula

    Counts the degree in ``n`` of the linear factor plus the Pochhammer indices
    in the numerator minus those in the denominator. The result does not
    depend on ``j``, which is why the differences scale as a single power of n.

    :param k: Moment order
    :type k: int
    :param j: Summation index
    :type j: int
    :returns: Exponent of the leading power of n
    :rtype: int
    """
    _, numerator, denominator = _u_factors(0, k, j, 0, 0)
    return 1 + sum(m for _, m in numerator) - sum(m for _, m in denominator)

def _u_coefficient(n, k, j, a, b):
    # (n + 1)_(-j) vanishes for j > n and the remaining factors stay finite in the limit
    if j > n:
        return Fraction(0)
    linear, numerator, denominator = _u_factors(n, k, j, a, b)
    value = Fraction(linear)
    for base, m in numerator:
        value *= pochhammer(base, m)
    for base, m in denominator:
        value *= rising_reciprocal(base, m)
    return value

def _beta2_difference(k, n, a, b):
    "M(k, n) - M(k + 1, n) for beta = 2"
    return sum((binom_ext(k, j)*binom_ext(k, j - 1)*_u_coefficient(n, k, j, a, b)
                for j in range(1, k + 1)), Fraction(0))/k

def _jacobi_beta2(k, n, a, b):
    if n == 0:
        return Fraction(0)
    value = _aomoto(n, a, b)
    for j in range(1, k):
        value -= _beta2_difference(j, n, a, b)
    return value

class _Laurent(object):
    """
    Truncated Laurent series in a small shift ``eps`` of one ensemble parameter

    The beta = 1 and beta = 4 closed forms contain single terms with poles at
    small ``n`` that cancel in the sum. Every factor is linear in the shifted
    parameter, so terms are built factor by factor and the moment is the
    constant term of the total.
    """

    TERMS = 8

    def __init__(self, valuation, coefficients):
        self.valuation = valuation
        self.coefficients = list(coefficients)[:self.TERMS]

    @classmethod
    def constant(cls, value):
        return cls(0, [Fraction(value)] + [Fraction(0)]*(cls.TERMS - 1))

    def is_zero(self):
        return not any(self.coefficients)

    def __add__(self, other):
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        low = min(self.valuation, other.valuation)
        result = [Fraction(0)]*self.TERMS
        for series in (self, other):
            offset = series.valuation - low
            for i, x in enumerate(series.coefficients[:self.TERMS - offset]):
                result[i + offset] += x
        return _Laurent(low, result)

    def scale(self, factor):
        return _Laurent(self.valuation, [factor*x for x in self.coefficients])

    def times_linear(self, c, d):
        "multiply by c + d eps"
        if self.is_zero() or (c == 0 and d == 0):
            return _Laurent.constant(0)
        if c == 0:
            return _Laurent(self.valuation + 1, [d*x for x in self.coefficients])
        shifted = [Fraction(0)] + self.coefficients[:-1]
        return _Laurent(self.valuation, [c*x + d*y for x, y in zip(self.coefficients, shifted)])

    def over_linear(self, c, d):
        "divide by c + d eps"
        if self.is_zero():
            return self
        if c == 0:
            if d == 0:
                raise PoleError("division by a factor that does not depend on the shifted parameter")
            return _Laurent(self.valuation - 1, [x/d for x in self.coefficients])
        result = []
        previous = Fraction(0)
        for x in self.coefficients:
            previous = (x - d*previous)/c
            result.append(previous)
        return _Laurent(self.valuation, result)

    def times_pochhammer(self, c, d, m):
        "multiply by (c + d eps)_(m) for an index of either sign"
        result = self
        if m >= 0:
            for t in range(m):
                result = result.times_linear(c + t, d)
        else:
            for t in range(1, -m + 1):
                result = result.over_linear(c - t, d)
        return result

    def over_pochhammer(self, c, d, m):
        "divide by (c + d eps)_(m) for an index of either sign"
        result = self
        if m >= 0:
            for t in range(m):
                result = result.over_linear(c + t, d)
        else:
            for t in range(1, -m + 1):
                result = result.times_linear(c - t, d)
        return result

    def limit(self):
        "constant term; a singular part that survives raises PoleError"
        if self.is_zero():
            return Fraction(0)
        if self.valuation + self.TERMS <= 0:
            raise PoleError("closed form has a pole of order {} or more".format(-self.valuation))
        for i, x in enumerate(self.coefficients):
            power = self.valuation + i
            if power < 0 and x != 0:
                raise PoleError("closed form has a pole of order {} at these parameters".format(-power))
            if power == 0:
                return x
        return Fraction(0)

def _s_jacobi(i, j, k, n, a, b, slope):
    "coefficient of the beta = 1 and beta = 4 Jacobi correction sums, a shifted by slope*eps"
    double = 2*slope
    value = _Laurent.constant(Fraction(2)**(4*j - 3))
    value = value.times_pochhammer(2*a + 2*n - i - 2*j + 1, double, i)
    value = value.times_pochhammer(2*b + 2*n, 0, k - i - 2*j + 1)
    value = value.times_pochhammer(2*a + 2*b + 2*n, double, k - i - 2*j + 1)
    value = value.over_pochhammer(2*n - 2*j + 1, 0, -i)
    value = value.over_pochhammer(n + 1, 0, -j)
    value = value.over_pochhammer(a + n + 1, slope, -j)
    value = value.over_pochhammer(b + n, 0, 1 - j)
    value = value.over_pochhammer(a + b + n, slope, 1 - j)
    value = value.times_linear(2*a + 2*b + 4*n - 4*j + 1, double)
    value = value.times_linear(2*a + 2*b + 4*n - 2*i - 4*j + k + 1, double)
    value = value.over_pochhammer(2*a + 2*b + 4*n - i - 2*j + 1, double, 1 + k)
    return value.over_pochhammer(2*a + 2*b + 4*n - i - 4*j + 1, double, 1 + k)

def _jacobi_correction(k, n, a, b, slope):
    "double sum over the S coefficients shared by beta = 1 and beta = 4"
    total = _Laurent.constant(0)
    for j in range(1, k//2 + 1):
        for i in range(0, k - 2*j + 1):
            term = _s_jacobi(i, j, k, n, a, b, slope)
            total = total + term.scale(binom_ext(k, i)*binom_ext(k, i + 2*j))
    return total

def _i_jacobi(k, n, a, b):
    "single sum completing the beta = 1 Jacobi moment, a shifted by eps"
    total = _Laurent.constant(0)
    half = Fraction(1, 2)
    for j in range(k + 1):
        term = _Laurent.constant(binom_ext(2*k, 2*j))
        term = term.times_linear(a + b + 2*n - 4*j - 1 + 2*k, 1)
        term = term.times_pochhammer((a + b + n)/2, half, k - j)
        term = term.times_pochhammer((b + n)/2, 0, k - j)
        term = term.over_pochhammer(a + b + 2*n - 2*j - 1, 1, 2*k + 1)
        term = term.over_pochhammer((a + n + 1)/2, half, -j)
        term = term.over_pochhammer(Fraction(1 + n, 2), 0, -j)
        total = total + term
    return total.scale(Fraction(4)**k)

def _jacobi_beta1(k, n, a, b):
    correction = _jacobi_correction(k, Fraction(n - 1, 2), a/2, b/2, Fraction(1, 2))
    singular = correction.scale(-2) + _i_jacobi(k, n, a, b)
    return _jacobi_beta2(k, n - 1, a, b) + singular.limit()

def _jacobi_beta4(k, n, a, b):
    return _jacobi_beta2(k, 2*n, 2*a, 2*b)/2 - _jacobi_correction(k, Fraction(n), a, b, 1).limit()

def moment_jacobi(beta, k, n, a, b):
    """
    Exact positive moment of the Jacobi beta-ensemble

    Computes ``M_J(k, n) = <sum_j x_j^k>``. For beta = 2 the first moment is
    Aomoto's integral ``n(b + n)/(a + b + 2n)`` and higher moments subtract
    the closed-form differences ``M(j, n) - M(j + 1, n)``. For beta = 1 and
    beta = 4 the moment is expressed through the beta = 2 moment at shifted
    arguments plus correction sums. Those representations hold for
    ``n > k beta/2``.

    :param beta: Dyson index, one of 1, 2, or 4
    :type beta: int
    :param k: Moment order, at least 1
    :type k: int
    :param n: Number of eigenvalues
    :type n: int
    :param a: Exponent parameter of ``(1 - x)``
    :type a: int, Fraction or str
    :param b: Exponent parameter of ``x``
    :type b: int, Fraction or str
    :returns: Exact moment with provenance
    :rtype: MomentResult
    """
    _check_order(k)
    assert int(n) == n and n >= 1, "number of eigenvalues must be a positive integer"
    k = int(k)
    n = int(n)
    a = as_rational(a)
    b = as_rational(b)

    if beta == 2:
        return _moment_result(_jacobi_beta2(k, n, a, b), "jacobi-beta2-differences")
    if beta not in (1, 4):
        raise ValueError("beta must be 1, 2, or 4, got {}".format(beta))
    if 2*n <= k*beta:
        raise ValidityRangeError("beta = {} Jacobi moments require n > k beta/2, got k = {}, n = {}"
                                 .format(beta, k, n))
    if beta == 1:
        return _moment_result(_jacobi_beta1(k, n, a, b), "jacobi-beta1-decomposition")
    return _moment_result(_jacobi_beta4(k, n, a, b), "jacobi-beta4-decomposition")

def moment_jacobi_sum(k, n, a, b):
    """
    beta = 2 Jacobi moment summed in Narayana-weighted form

    Evaluates the same moment as ``moment_jacobi(2, k, n, a, b)`` with the
    differences accumulated from the highest order down and each term
    weighted by a Narayana number, providing a second route to the same
    exact value.
    """
    _check_order(k)
    n = int(n)
    a = as_rational(a)
    b = as_rational(b)
    total = Fraction(0)
    for i in reversed(range(1, k)):
        for j in range(1, i + 1):
            total += narayana(i, j)*_u_coefficient(n, i, j, a, b)
    return _aomoto(n, a, b) - total

def _laguerre_beta2(k, n, b, slope=1):
    "beta = 2 negative moment with b shifted by slope*eps"
    total = _Laurent.constant(0)
    falling = 1
    for j in range(n):
        falling *= n - j
        term = _Laurent.constant(binom_ext(k + j, k - 1)*binom_ext(k + j - 1, k - 1)*falling)
        total = total + term.times_pochhammer(b + n, slope, -k - j)
    return total.scale(Fraction(1, k))

def _s_laguerre_sum(k, n, b, j_max, i_span, slope):
    """
    double sum over S^b_{i,j}(-k, n) for j = 1..j_max and i = 0..i_span - 2j

    ``2n`` must be an integer; b is shifted by slope*eps.
    """
    total = _Laurent.constant(0)
    top = int(2*n)
    for j in range(1, j_max + 1):
        outer = _Laurent.constant(binom_ext(k + j - 1, k - 1)*Fraction(2)**(k + 2*j - 2)
                                  *rising_reciprocal(n + 1, -j))
        outer = outer.over_pochhammer(b + n, slope, 1 - j)
        for i in range(0, i_span - 2*j + 1):
            # (2n - i - 2j + 1)_(i) = (2n - 2j)!/(2n - 2j - i)!, zero once a factor vanishes
            if top - 2*j - i < 0:
                continue
            falling = factorial(top - 2*j)//factorial(top - 2*j - i)
            term = outer.scale(binom_ext(k + i + 2*j - 1, k - 1)*falling)
            total = total + term.times_pochhammer(2*b + 2*n, 2*slope, -k - i - 2*j + 1)
    return total

def _laguerre_beta1(k, n, b):
    half = Fraction(1, 2)
    correction = _s_laguerre_sum(k, Fraction(n - 1, 2), b/2, n//2 - 1, n, half)
    total = _Laurent.constant(0)
    for j in range(n//2):
        term = _Laurent.constant(binom_ext(2*k + 2*j - 1, 2*j)*rising_reciprocal(Fraction(1 + n, 2), -j))
        total = total + term.times_pochhammer((b + n)/2, half, -k - j)
    singular = (_laguerre_beta2(k, n - 1, b)
                + correction.scale(-Fraction(2)**(1 - k))
                + total.scale(1/Fraction(2)**k))
    return singular.limit()

def _laguerre_beta4(k, n, b):
    singular = (_laguerre_beta2(k, 2*n, 2*b, 2).scale(Fraction(2)**(k - 1))
                + _s_laguerre_sum(k, Fraction(n), b, n, 2*n, 1).scale(-1))
    return singular.limit()

def _partitions(total, largest=None):
    "partitions of total as non-increasing tuples"
    if largest is None:
        largest = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest

def _key(parts):
    return tuple(sorted(parts, reverse=True))

class _LoopEquations(object):
    """
    Joint negative moments of the Laguerre beta-ensemble from integration by parts

    Integrating ``sum_i d/dx_i (x_i^(1-m) P w)`` against the joint density
    ``w`` for a product ``P`` of negative power sums gives one linear
    relation between moments of total degree ``m + deg P`` and a single
    moment one degree lower. All relations of a given degree are solved
    together by exact Gauss-Jordan elimination, starting from the empty
    product at degree zero. The result is exact for every beta and every
    ``n``, and equals the true moment wherever the latter exists.
    """

    def __init__(self, beta, n, b):
        self.half = Fraction(beta, 2)
        self.alpha = self.half*(b + 1) - 1
        self.n = n
        self.moments = {(): Fraction(1)}
        self.degree = 0

    def mixed_moment(self, parts):
        "<prod_r p_(-k_r)> for the negative power sums ``p_(-k) = sum_j x_j^(-k)``"
        parts = _key(parts)
        while self.degree < sum(parts):
            self._solve_degree(self.degree + 1)
        return self.moments[parts]

    def _relation(self, parts, index):
        "coefficients and right-hand side of the relation with part ``index`` differentiated"
        m = parts[index]
        rest = parts[:index] + parts[index + 1:]
        row = {}

        def add(key, coefficient):
            key = _key(key)
            row[key] = row.get(key, Fraction(0)) + coefficient

        add(parts, self.alpha + (self.half - 1)*(m - 1))
        for s in range(1, m):
            add(rest + (s, m - s), -self.half)
        for r, part in enumerate(rest):
            add(rest[:r] + rest[r + 1:] + (m + part,), -part)
        if m == 1:
            rhs = self.half*self.n*self.moments[_key(rest)]
        else:
            rhs = self.half*self.moments[_key(rest + (m - 1,))]
        return row, rhs

    def _solve_degree(self, degree):
        unknowns = list(_partitions(degree))
        column = dict((key, i) for i, key in enumerate(unknowns))
        matrix = []
        for parts in unknowns:
            for index in range(len(parts)):
                if index > 0 and parts[index] == parts[index - 1]:
                    continue
                row, rhs = self._relation(parts, index)
                line = [Fraction(0)]*(len(unknowns) + 1)
                for key, coefficient in row.items():
                    line[column[key]] += coefficient
                line[-1] = rhs
                matrix.append(line)

        for col in range(len(unknowns)):
            pivot = next((i for i in range(col, len(matrix)) if matrix[i][col] != 0), None)
            if pivot is None:
                raise PoleError("negative Laguerre moments of degree {} are singular at alpha = {}"
                                .format(degree, self.alpha))
            matrix[col], matrix[pivot] = matrix[pivot], matrix[col]
            scale = matrix[col][col]
            matrix[col] = [x/scale for x in matrix[col]]
            for i in range(len(matrix)):
                factor = matrix[i][col]
                if i != col and factor != 0:
                    matrix[i] = [x - factor*y for x, y in zip(matrix[i], matrix[col])]

        for i, key in enumerate(unknowns):
            self.moments[key] = matrix[i][-1]
        self.degree = degree

def laguerre_mixed_moment(beta, parts, n, b):
    """
    Exact joint negative moment of the Laguerre beta-ensemble

    Computes ``<prod_r sum_j x_j^(-k_r)>`` for the orders ``k_r`` in
    ``parts`` by solving the integration-by-parts relations degree by
    degree. Works for any ``beta > 0`` and any ``n``; the value is finite
    only for ``sum(parts) < beta/2 (b + 1)``, and outside that range the
    analytic continuation in ``b`` is returned.

    :param beta: Dyson index
    :type beta: int or Fraction
    :param parts: Orders of the negative power sums, each at least 1
    :type parts: iterable of int
    :param n: Number of eigenvalues
    :type n: int
    :param b: Exponent parameter of ``x``
    :type b: int, Fraction or str
    :returns: Exact joint moment
    :rtype: Fraction
    """
    parts = [int(part) for part in parts]
    assert all(part >= 1 for part in parts), "orders of the negative power sums must be at least 1"
    assert int(n) == n and n >= 1, "number of eigenvalues must be a positive integer"
    beta = as_rational(beta)
    assert beta > 0, "beta must be positive"
    return _LoopEquations(beta, int(n), as_rational(b)).mixed_moment(parts)

def phi_term(k, n, b):
    """
    Difference between the exact beta = 1 negative moment and its closed-form decomposition

    The beta = 1 decomposition onto beta = 2 moments leaves out a remainder
    term. This function returns that remainder exactly, as the
    integration-by-parts moment minus the closed form. It is not small at
    fixed ``b``: for ``k = 1`` it is ``2/(b(b-1))`` at ``n = 2`` and
    ``12/((b-1)b(b+2))`` at ``n = 4``.
    """
    exact = moment_laguerre_neg(1, k, n, b, method=LOOP_EQUATIONS).value
    return exact - moment_laguerre_neg(1, k, n, b, method=CLOSED_FORM).value

def moment_laguerre_neg(beta, k, n, b, method=None):
    """
    Exact negative moment of the Laguerre beta-ensemble

    Computes ``<sum_j x_j^(-k)>``, which exists for ``k < n beta/2 + 1``
    when ``b`` takes its delay-time value. Two methods are available:

    - ``"closed-form"``: the beta = 2 Narayana-weighted sum, and for beta = 1
      and beta = 4 the decomposition onto beta = 2 moments, which requires
      ``n > k beta/2``. The beta = 1 decomposition leaves out the remainder
      returned by ``phi_term``, so its results carry the flag
      ``OMITTED_PHI_TERM`` and it requires even ``n``.
    - ``"loop-equations"``: the integration-by-parts relations solved
      exactly, valid for any ``n``.

    The default is ``"loop-equations"`` for beta = 1 and ``"closed-form"``
    otherwise, so every default result is exact.

    :param beta: Dyson index, one of 1, 2, or 4
    :type beta: int
    :param k: Order of the negative moment, at least 1
    :type k: int
    :param n: Number of eigenvalues
    :type n: int
    :param b: Exponent parameter of ``x``
    :type b: int, Fraction or str
    :param method: ``"closed-form"``, ``"loop-equations"`` or ``None`` for the default
    :type method: str or None
    :returns: Exact moment with provenance
    :rtype: MomentResult
    """
    _check_order(k)
    assert int(n) == n and n >= 1, "number of eigenvalues must be a positive integer"
    k = int(k)
    n = int(n)
    b = as_rational(b)

    if beta not in (1, 2, 4):
        raise ValueError("beta must be 1, 2, or 4, got {}".format(beta))
    if method is None:
        method = LOOP_EQUATIONS if beta == 1 else CLOSED_FORM
    if not method in (CLOSED_FORM, LOOP_EQUATIONS):
        raise ValueError("method must be '{}' or '{}', got {}".format(CLOSED_FORM, LOOP_EQUATIONS, method))
    if 2*(k - 1) >= n*beta:
        raise ValidityRangeError("negative Laguerre moments require k < n beta/2 + 1, got k = {}, n = {}"
                                 .format(k, n))

    if method == LOOP_EQUATIONS:
        return _moment_result(_LoopEquations(beta, n, b).mixed_moment((k,)), "laguerre-loop-equations")

    if beta != 2 and 2*n <= k*beta:
        raise ValidityRangeError("beta = {} Laguerre moments require n > k beta/2, got k = {}, n = {}"
                                 .format(beta, k, n))
    if beta == 2:
        return _moment_result(_laguerre_beta2(k, n, b).limit(), "laguerre-beta2-narayana")
    if beta == 4:
        return _moment_result(_laguerre_beta4(k, n, b), "laguerre-beta4-decomposition")
    if n % 2:
        raise ParityError("the beta = 1 Laguerre decomposition requires even n, got {}".format(n))
    return _moment_result(_laguerre_beta1(k, n, b), "laguerre-beta1-decomposition", [OMITTED_PHI_TERM])

def moment_selberg_like(beta, k, n, u, v):
    """
    Exact Selberg-like moment at finite n

    The Jacobi moment with both exponents growing linearly in ``n``:
    ``a = (v - 1)n`` and ``b = (u - 1)n``.

    :param beta: Dyson index, one of 1, 2, or 4
    :type beta: int
    :param k: Moment order, at least 1
    :type k: int
    :param n: Number of eigenvalues
    :type n: int
    :param u: Scaling of the exponent of ``x``
    :type u: int, Fraction or str
    :param v: Scaling of the exponent of ``(1 - x)``
    :type v: int, Fraction or str
    :returns: Exact moment with provenance
    :rtype: MomentResult
    """
    params = map_params(SymmetryClass(beta), SELBERG_LIKE, n, u=u, v=v)
    result = moment_jacobi(beta, k, n, params.a, params.b)
    result.formula = "selberg-like/" + result.formula
    return result

def _mpf(x):
    x = Fraction(x)
    return mp.mpf(x.numerator)/x.denominator

def _log_gamma_checked(x):
    if x <= 0:
        raise DomainError("gamma function argument {} is not positive".format(x))
    return mp.loggamma(_mpf(x))

def selberg_constant(beta, a, b, n, dps=40):
    """
    Normalization of the Jacobi beta-ensemble from Selberg's integral

    ``C_n = prod_{j=0}^{n-1} Gamma(beta/2 (b+1+j)) Gamma(beta/2 (a+1+j))
    Gamma(1 + (j+1) beta/2)/(Gamma(beta/2 (a+b+1+n+j)) Gamma(1 + beta/2))``,
    the integral of the unnormalized weight over ``[0, 1]^n``. Accumulated in
    log-gamma at ``dps`` decimal digits.

    :param beta: Dyson index
    :type beta: int
    :param a: Exponent parameter of ``(1 - x)``
    :type a: int, Fraction or str
    :param b: Exponent parameter of ``x``
    :type b: int, Fraction or str
    :param n: Number of eigenvalues
    :type n: int
    :param dps: Decimal digits of working precision (optional, default is 40)
    :type dps: int
    :returns: Normalization constant
    :rtype: mpmath.mpf
    """
    a = as_rational(a)
    b = as_rational(b)
    half = Fraction(beta, 2)
    with mp.workdps(dps):
        total = mp.mpf(0)
        for j in range(n):
            total += _log_gamma_checked(half*(b + 1 + j))
            total += _log_gamma_checked(half*(a + 1 + j))
            total += _log_gamma_checked(1 + (j + 1)*half)
            total -= _log_gamma_checked(half*(a + b + 1 + n + j))
            total -= _log_gamma_checked(1 + half)
        return +mp.exp(total)

def laguerre_constant(beta, b, n, dps=40):
    """
    Normalization of the Laguerre beta-ensemble

    Integral of ``prod_j x_j^(beta/2 (b+1) - 1) exp(-beta x_j/2) |Delta|^beta``
    over ``(0, inf)^n``, the Laguerre limit of Selberg's integral.

    :param beta: Dyson index
    :type beta: int
    :param b: Exponent parameter of ``x``
    :type b: int, Fraction or str
    :param n: Number of eigenvalues
    :type n: int
    :param dps: Decimal digits of working precision (optional, default is 40)
    :type dps: int
    :returns: Normalization constant
    :rtype: mpmath.mpf
    """
    b = as_rational(b)
    half = Fraction(beta, 2)
    exponent = n*half*(b + 1) + half*n*(n - 1)
    with mp.workdps(dps):
        total = _mpf(exponent)*mp.log(_mpf(Fraction(2, beta)))
        for j in range(n):
            total += _log_gamma_checked(half*(b + 1 + j))
            total += _log_gamma_checked(1 + (j + 1)*half)
            total -= _log_gamma_checked(1 + half)
        return +mp.exp(total)
