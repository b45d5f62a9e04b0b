"""
Exact rational special functions

All quantities are ``fractions.Fraction`` instances (or plain integers, which
are promoted). Nothing in this module touches floating point.
"""

from fractions import Fraction
from math import comb, factorial
from .errors import PoleError, DomainError, NonTerminatingError

MAX_BERNOULLI_ORDER = 8

def as_rational(x):
    """
    Convert an argument to an exact rational

    Accepts integers, ``Fraction`` instances and strings of the form ``"p/q"``
    or ``"p"``. Floats are rejected, as converting them silently would bring
    binary rounding errors into exact computations.

    :param x: Value to convert
    :type x: int, Fraction or str
    :returns: Exact rational value
    :rtype: Fraction
    """
    if isinstance(x, bool):
        raise TypeError("rational arguments must be int, Fraction, or str")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except ValueError:
            raise ValueError("cannot parse '{}' as a rational number".format(x))
    raise TypeError("rational arguments must be int, Fraction, or str, got {}".format(type(x).__name__))

def is_integer(x):
    "check if a rational value is an integer"
    return Fraction(x).denominator == 1

def _comb(n, k):
    "integer binomial with the extended sign convention"
    if k < 0:
        return 0
    if n >= 0:
        if k > n:
            return 0
        return comb(n, k)
    return (-1)**k*comb(k - n - 1, k)

def binom_ext(n, k):
    """
    Binomial coefficient extended to negative upper index

    For ``n >= 0`` this is the usual binomial coefficient, and it is zero when
    ``k < 0`` or ``k > n``. For negative ``n`` the relation
    ``C(-m, j) = (-1)^j C(m + j - 1, m - 1)`` is used.

    :param n: Upper index
    :type n: int
    :param k: Lower index
    :type k: int
    :returns: Binomial coefficient
    :rtype: Fraction
    """
    assert int(n) == n and int(k) == k, "binomial indices must be integers"
    return Fraction(_comb(int(n), int(k)))

def binom_rational(x, k):
    "binomial coefficient with rational upper index and integer lower index"
    assert int(k) == k, "lower binomial index must be an integer"
    if k < 0:
        return Fraction(0)
    result = Fraction(1)
    for i in range(int(k)):
        result *= (Fraction(x) - i)
    return result/factorial(int(k))

def pochhammer(x, m):
    """
    Pochhammer symbol as the gamma ratio Gamma(x + m)/Gamma(x)

    For positive ``m`` this is the rising product ``x (x + 1) ... (x + m - 1)``.
    For negative ``m`` the ratio is ``1/((x - 1)(x - 2) ... (x + m))``, which
    has a pole if any factor vanishes.

    :param x: Base of the symbol
    :type x: int, Fraction or str
    :param m: Integer index, may be negative
    :type m: int
    :returns: Exact value of the symbol
    :rtype: Fraction
    """
    assert int(m) == m, "Pochhammer index must be an integer"
    x = as_rational(x)
    m = int(m)

    result = Fraction(1)
    if m >= 0:
        for i in range(m):
            result *= x + i
        return result

    for i in range(1, -m + 1):
        result *= x - i
    if result == 0:
        raise PoleError("Pochhammer symbol ({})_({}) has a pole".format(x, m))
    return 1/result

def rising_reciprocal(x, m):
    """
    Reciprocal of a Pochhammer symbol, 1/(x)_(m)

    Evaluated as ``(x + m)_(-m)``. For negative ``m`` this is a finite product
    that vanishes wherever ``(x)_(m)`` has a pole, so denominators of the
    finite-n moment formulas can be written as products. For positive ``m``
    a vanishing Pochhammer symbol raises ``PoleError``.

    :param x: Base of the symbol
    :type x: int, Fraction or str
    :param m: Integer index, may be negative
    :type m: int
    :returns: Exact value of the reciprocal
    :rtype: Fraction
    """
    assert int(m) == m, "Pochhammer index must be an integer"
    x = as_rational(x)
    m = int(m)

    result = Fraction(1)
    if m <= 0:
        for i in range(1, -m + 1):
            result *= x - i
        return result

    for i in range(m):
        result *= x + i
    if result == 0:
        raise PoleError("reciprocal of ({})_({}) has a pole".format(x, m))
    return 1/result

class PolyQ(object):
    """
    Dense univariate polynomial with exact rational coefficients

    Coefficients are stored with index equal to degree and trailing zeros
    removed. The zero polynomial has degree ``PolyQ.ZERO_DEGREE`` (-1).
    """

    ZERO_DEGREE = -1

    def __init__(self, coefficients):
        coefficients = [as_rational(c) for c in coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        self._coefficients = tuple(coefficients)

    @property
    def coefficients(self):
        "polynomial coefficients, lowest degree first"
        return self._coefficients

    @property
    def degree(self):
        "degree of the polynomial (-1 for the zero polynomial)"
        return len(self._coefficients) - 1

    def __call__(self, x):
        x = as_rational(x)
        result = Fraction(0)
        for c in reversed(self._coefficients):
            result = result*x + c
        return result

    def _coerce(self, other):
        if isinstance(other, PolyQ):
            return other
        return PolyQ([other])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self._coefficients), len(other._coefficients))
        lhs = list(self._coefficients) + [Fraction(0)]*(n - len(self._coefficients))
        rhs = list(other._coefficients) + [Fraction(0)]*(n - len(other._coefficients))
        return PolyQ([a + b for a, b in zip(lhs, rhs)])

    __radd__ = __add__

    def __neg__(self):
        return PolyQ([-c for c in self._coefficients])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if self.degree == self.ZERO_DEGREE or other.degree == self.ZERO_DEGREE:
            return PolyQ([])
        product = [Fraction(0)]*(len(self._coefficients) + len(other._coefficients) - 1)
        for i, a in enumerate(self._coefficients):
            for j, b in enumerate(other._coefficients):
                product[i + j] += a*b
        return PolyQ(product)

    __rmul__ = __mul__

    def __pow__(self, power):
        assert int(power) == power and power >= 0, "polynomial powers must be non-negative integers"
        result = PolyQ([1])
        for _ in range(int(power)):
            result = result*self
        return result

    def __eq__(self, other):
        if isinstance(other, PolyQ):
            return self._coefficients == other._coefficients
        try:
            return self == PolyQ([other])
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self._coefficients)

    def derivative(self):
        "derivative of the polynomial"
        return PolyQ([i*c for i, c in enumerate(self._coefficients)][1:])

    def __repr__(self):
        return "PolyQ([{}])".format(", ".join(str(c) for c in self._coefficients))

def narayana(k, j):
    """
    Narayana number, including the negative-index extension

    For ``k > 0`` returns ``(1/k) C(k, j) C(k, j - 1)``. For negative
    ``k = -q`` returns ``(1/q) C(q + j, q - 1) C(q + j - 1, q - 1)``, the
    coefficient that appears in the negative Laguerre moments.

    :param k: First index, nonzero
    :type k: int
    :param j: Second index
    :type j: int
    :returns: Narayana number
    :rtype: Fraction
    """
    assert int(k) == k and int(j) == j, "Narayana indices must be integers"
    k = int(k)
    j = int(j)
    if k == 0:
        raise DomainError("Narayana numbers are undefined for k = 0")
    if k > 0:
        return Fraction(_comb(k, j)*_comb(k, j - 1), k)
    q = -k
    return Fraction(_comb(q + j, q - 1)*_comb(q + j - 1, q - 1), q)

def narayana_poly_coeffs(k):
    "Narayana polynomial N_k as a PolyQ"
    if k < 1:
        raise DomainError("Narayana polynomials are defined for k >= 1")
    return PolyQ([narayana(k, j) for j in range(k + 1)])

def narayana_poly(k, u):
    """
    Narayana polynomial ``N_k(u) = (1/k) sum_j C(k, j) C(k, j - 1) u^j``

    :param k: Degree, at least 1
    :type k: int
    :param u: Evaluation point
    :type u: int, Fraction or str
    :returns: Value of the polynomial
    :rtype: Fraction
    """
    return narayana_poly_coeffs(k)(u)

def jacobi_poly(n, alpha, beta, x):
    """
    Jacobi polynomial from the explicit double-binomial formula

    ``P_n^(alpha, beta)(x) = sum_s C(n + alpha, n - s) C(n + beta, s)
    ((x - 1)/2)^s ((x + 1)/2)^(n - s)``

    :param n: Degree, non-negative
    :type n: int
    :param alpha: First parameter
    :type alpha: int
    :param beta: Second parameter
    :type beta: int
    :param x: Evaluation point
    :type x: int, Fraction or str
    :returns: Value of the polynomial
    :rtype: Fraction
    """
    assert int(n) == n, "Jacobi polynomial degree must be an integer"
    if n < 0:
        raise DomainError("Jacobi polynomial degree must be non-negative, got {}".format(n))
    x = as_rational(x)
    n = int(n)
    lower = (x - 1)/2
    upper = (x + 1)/2
    result = Fraction(0)
    for s in range(n + 1):
        result += (_comb(n + alpha, n - s)*_comb(n + beta, s))*lower**s*upper**(n - s)
    return result

def jacobi_recurrence(n, alpha, beta, x):
    "Jacobi polynomial via the three-term recurrence in the degree"
    if n < 0:
        raise DomainError("Jacobi polynomial degree must be non-negative, got {}".format(n))
    x = as_rational(x)
    previous = Fraction(1)
    if n == 0:
        return previous
    current = ((alpha + beta + 2)*x + (alpha - beta))/2
    for m in range(2, n + 1):
        c = 2*m + alpha + beta
        next_value = ((c - 1)*(c*(c - 2)*x + alpha**2 - beta**2)*current
                      - 2*(m + alpha - 1)*(m + beta - 1)*c*previous)/(2*m*(m + alpha + beta)*(c - 2))
        previous, current = current, next_value
    return current

def connection_coeff(j, p, n, alpha, beta):
    """
    Coefficient of the connection formula raising the second Jacobi parameter

    ``P_n^(alpha, beta) = sum_{j=0}^p c_j P_{n-j}^(alpha, beta + p)``. Swapping
    ``alpha`` and ``beta`` and weighting by ``(-1)^j`` gives the formula raising
    the first parameter.

    :param j: Index of the term, ``0 <= j <= p``
    :type j: int
    :param p: Shift of the parameter
    :type p: int
    :param n: Degree of the expanded polynomial
    :type n: int
    :param alpha: First parameter
    :type alpha: int
    :param beta: Second parameter
    :type beta: int
    :returns: Connection coefficient
    :rtype: Fraction
    """
    return (binom_ext(p, j)*pochhammer(alpha + beta + n + 1, p - j)
            *(alpha + beta + 2*n - 2*j + 1 + p)
            *rising_reciprocal(alpha + beta + 2*n - j + 1, p + 1)
            *rising_reciprocal(alpha + n + 1, -j))

def hyp2f1_terminating(a, b, c, z):
    """
    Terminating Gauss hypergeometric series

    Sums ``(a)_j (b)_j/((c)_j j!) z^j`` exactly. One of ``a`` or ``b`` must be
    a non-positive integer so that the series is a polynomial in ``z``.

    :param a: First numerator parameter
    :type a: int, Fraction or str
    :param b: Second numerator parameter
    :type b: int, Fraction or str
    :param c: Denominator parameter
    :type c: int, Fraction or str
    :param z: Argument
    :type z: int, Fraction or str
    :returns: Value of the series
    :rtype: Fraction
    """
    a, b, c, z = [as_rational(v) for v in (a, b, c, z)]

    lengths = [int(-v) for v in (a, b) if is_integer(v) and v <= 0]
    if not lengths:
        raise NonTerminatingError("2F1({}, {}; {}; z) does not terminate".format(a, b, c))
    last = min(lengths)

    result = Fraction(0)
    term = Fraction(1)
    for j in range(last + 1):
        result += term
        if j == last:
            break
        if c + j == 0:
            raise PoleError("2F1 denominator parameter {} reaches a pole".format(c))
        term *= (a + j)*(b + j)/((c + j)*(j + 1))*z
    return result

def _power_series_power(coefficients, exponent, order):
    "Miller recurrence for a power of a series with unit constant term"
    result = [Fraction(1)] + [Fraction(0)]*order
    for m in range(1, order + 1):
        total = Fraction(0)
        for j in range(1, m + 1):
            total += ((exponent + 1)*j - m)*coefficients[j]*result[m - j]
        result[m] = total/m
    return result

def gen_bernoulli(i, gamma, alpha, max_order=MAX_BERNOULLI_ORDER):
    """
    Generalized Bernoulli polynomial B_i^(gamma)(alpha)

    Defined through ``(t/(e^t - 1))^gamma e^(alpha t) = sum_i B_i^(gamma)(alpha) t^i/i!``.
    The power of the series is computed exactly with the Miller recurrence and
    then convolved with the exponential series.

    :param i: Order of the polynomial
    :type i: int
    :param gamma: Order parameter
    :type gamma: int, Fraction or str
    :param alpha: Evaluation point
    :type alpha: int, Fraction or str
    :param max_order: Maximum permitted order (optional, default is
                      ``MAX_BERNOULLI_ORDER``)
    :type max_order: int
    :returns: Value of the polynomial
    :rtype: Fraction
    """
    assert int(i) == i, "Bernoulli order must be an integer"
    if i < 0 or i > max_order:
        raise DomainError("Bernoulli order must lie in [0, {}], got {}".format(max_order, i))
    gamma = as_rational(gamma)
    alpha = as_rational(alpha)
    i = int(i)

    # (e^t - 1)/t, raised to -gamma
    base = [Fraction(1, factorial(j + 1)) for j in range(i + 1)]
    power = _power_series_power(base, -gamma, i)

    coefficient = Fraction(0)
    for j in range(i + 1):
        coefficient += power[j]*alpha**(i - j)/factorial(i - j)
    return coefficient*factorial(i)

def gamma_ratio_coeffs(alpha, beta, order, max_order=MAX_BERNOULLI_ORDER):
    """
    Coefficients of the large-z expansion of Gamma(z + alpha)/Gamma(z + beta)

    Returns ``[c_0, ..., c_order]`` with
    ``Gamma(z + alpha)/Gamma(z + beta) ~ z^(alpha - beta) sum_i c_i z^(-i)``,
    where ``c_i = C(alpha - beta, i) B_i^(alpha - beta + 1)(alpha)``.

    :param alpha: Shift in the numerator
    :type alpha: int, Fraction or str
    :param beta: Shift in the denominator
    :type beta: int, Fraction or str
    :param order: Highest coefficient index
    :type order: int
    :param max_order: Maximum permitted order (optional, default is
                      ``MAX_BERNOULLI_ORDER``)
    :type max_order: int
    :returns: Expansion coefficients
    :rtype: list of Fraction
    """
    alpha = as_rational(alpha)
    beta = as_rational(beta)
    if order < 0 or order > max_order:
        raise DomainError("expansion order must lie in [0, {}], got {}".format(max_order, order))
    difference = alpha - beta
    return [binom_rational(difference, i)*gen_bernoulli(i, difference + 1, alpha, max_order)
            for i in range(order + 1)]
