"""
Truncated formal power series in s with exact rational coefficients
"""

from fractions import Fraction
from math import isqrt
from .ExactMath import as_rational
from .errors import DivisionByZeroSeries, NotAPerfectSquareConstant

DEFAULT_ORDER = 32

def rational_sqrt(x):
    """
    Exact square root of a non-negative rational square

    :param x: Value whose root is taken
    :type x: Fraction
    :returns: Non-negative square root
    :rtype: Fraction
    """
    x = Fraction(x)
    if x < 0:
        raise NotAPerfectSquareConstant("{} is negative and has no rational square root".format(x))
    num = isqrt(x.numerator)
    den = isqrt(x.denominator)
    if num*num != x.numerator or den*den != x.denominator:
        raise NotAPerfectSquareConstant("{} is not the square of a rational".format(x))
    return Fraction(num, den)

class SeriesQ(object):
    """
    Truncated power series over the rationals

    A ``SeriesQ`` holds the coefficients of ``s^0, ..., s^(order - 1)``. Any
    information about higher powers is unknown, so the result of combining
    two series is only known to the smaller of the two truncation orders.
    Scalars (integers and ``Fraction`` instances) combine with series as
    constant series of matching order.

    Series are immutable once created.

    :param coefficients: Coefficients, lowest power first. Padded with zeros
                         or truncated to ``order``.
    :type coefficients: iterable
    :param order: Truncation order (exclusive). Defaults to the number of
                  coefficients given.
    :type order: int or None
    """
    def __init__(self, coefficients, order=None):
        coefficients = [as_rational(c) for c in coefficients]
        if order is None:
            order = len(coefficients)
        assert int(order) == order and order >= 0, "series order must be a non-negative integer"
        order = int(order)
        coefficients = coefficients[:order] + [Fraction(0)]*max(0, order - len(coefficients))
        self._coefficients = tuple(coefficients)

    @classmethod
    def constant(cls, value, order=DEFAULT_ORDER):
        "constant series"
        return cls([value], order)

    @classmethod
    def variable(cls, order=DEFAULT_ORDER):
        "the series s"
        return cls([0, 1], order)

    @property
    def order(self):
        "truncation order (exclusive)"
        return len(self._coefficients)

    @property
    def coefficients(self):
        "tuple of coefficients, lowest power first"
        return self._coefficients

    def __len__(self):
        return len(self._coefficients)

    def __getitem__(self, k):
        return self._coefficients[k]

    def __iter__(self):
        return iter(self._coefficients)

    def __repr__(self):
        return "SeriesQ([{}], order={})".format(", ".join(str(c) for c in self._coefficients), self.order)

    def __eq__(self, other):
        if isinstance(other, SeriesQ):
            return self._coefficients == other._coefficients
        return NotImplemented

    def __hash__(self):
        return hash(self._coefficients)

    def truncate(self, order):
        "series restricted to a lower truncation order"
        assert order <= self.order, "cannot extend a series beyond its truncation order"
        return SeriesQ(self._coefficients[:order], order)

    def _coerce(self, other):
        if isinstance(other, SeriesQ):
            return other
        return SeriesQ.constant(as_rational(other), self.order)

    def __add__(self, other):
        other = self._coerce(other)
        order = min(self.order, other.order)
        return SeriesQ([a + b for a, b in zip(self._coefficients[:order], other._coefficients[:order])])

    __radd__ = __add__

    def __neg__(self):
        return SeriesQ([-c for c in self._coefficients])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, SeriesQ):
            factor = as_rational(other)
            return SeriesQ([factor*c for c in self._coefficients])
        order = min(self.order, other.order)
        lhs = self._coefficients
        rhs = other._coefficients
        product = []
        for k in range(order):
            product.append(sum((lhs[j]*rhs[k - j] for j in range(k + 1)), Fraction(0)))
        return SeriesQ(product)

    __rmul__ = __mul__

    def inverse(self):
        """
        Multiplicative inverse of the series

        :returns: Series ``1/self`` to the same truncation order
        :rtype: SeriesQ
        """
        if self.order == 0:
            return SeriesQ([])
        c0 = self._coefficients[0]
        if c0 == 0:
            raise DivisionByZeroSeries("cannot invert a series with zero constant term")
        result = [1/c0]
        for k in range(1, self.order):
            total = sum((self._coefficients[j]*result[k - j] for j in range(1, k + 1)), Fraction(0))
            result.append(-total/c0)
        return SeriesQ(result)

    def __truediv__(self, other):
        if not isinstance(other, SeriesQ):
            divisor = as_rational(other)
            if divisor == 0:
                raise DivisionByZeroSeries("division of a series by zero")
            return SeriesQ([c/divisor for c in self._coefficients])
        return self*other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other)*self.inverse()

    def sqrt(self):
        """
        Square root with positive constant term

        The constant term must be the square of a rational. Coefficients
        follow from equating powers of s in ``y*y = self``.

        :returns: Square root to the same truncation order
        :rtype: SeriesQ
        """
        if self.order == 0:
            return SeriesQ([])
        c0 = self._coefficients[0]
        if c0 == 0:
            raise NotAPerfectSquareConstant("square root of a series with zero constant term")
        y0 = rational_sqrt(c0)
        result = [y0]
        for k in range(1, self.order):
            total = sum((result[j]*result[k - j] for j in range(1, k)), Fraction(0))
            result.append((self._coefficients[k] - total)/(2*y0))
        return SeriesQ(result)

    def power(self, exponent):
        """
        Integer or half-integer power of the series

        Half-integer powers go through the square root, so the constant term
        must then be a rational square. Negative powers invert first.

        :param exponent: Power, an integer multiple of 1/2
        :type exponent: int, Fraction or str
        :returns: Series raised to the power
        :rtype: SeriesQ
        """
        exponent = as_rational(exponent)
        assert (2*exponent).denominator == 1, "only integer and half-integer powers are supported"
        base = self
        if exponent.denominator == 2:
            base = base.sqrt()
            exponent = 2*exponent
        exponent = int(exponent)
        if exponent < 0:
            base = base.inverse()
            exponent = -exponent
        result = SeriesQ.constant(1, self.order)
        square = base
        while exponent:
            if exponent & 1:
                result = result*square
            exponent >>= 1
            if exponent:
                square = square*square
        return result

    def __pow__(self, exponent):
        return self.power(exponent)

    def scale(self, factor):
        "substitute s -> factor*s"
        factor = as_rational(factor)
        return SeriesQ([c*factor**k for k, c in enumerate(self._coefficients)])

    def shift(self, m):
        "multiply by s^m, raising the truncation order by m"
        assert int(m) == m and m >= 0, "shift must be a non-negative integer"
        return SeriesQ([0]*int(m) + list(self._coefficients))

    def divide_by_s(self):
        "divide by s, lowering the truncation order by one"
        if self.order == 0:
            return SeriesQ([])
        if self._coefficients[0] != 0:
            raise DivisionByZeroSeries("series has nonzero constant term and is not divisible by s")
        return SeriesQ(self._coefficients[1:])

def series_arith(lhs, rhs, kind):
    """
    Exact truncated ring operation on two series

    :param lhs: Left operand
    :type lhs: SeriesQ
    :param rhs: Right operand
    :type rhs: SeriesQ
    :param kind: One of ``'add'``, ``'sub'``, ``'mul'``, or ``'div'``
    :type kind: str
    :returns: Result truncated to the smaller operand order
    :rtype: SeriesQ
    """
    if kind == "add":
        return lhs + rhs
    elif kind == "sub":
        return lhs - rhs
    elif kind == "mul":
        return lhs*rhs
    elif kind == "div":
        return lhs/rhs
    else:
        raise ValueError("unknown series operation '{}'".format(kind))

def series_sqrt(x):
    """
    Square root of a series with a rational-square constant term

    :param x: Series whose root is taken
    :type x: SeriesQ
    :returns: Root with positive constant term
    :rtype: SeriesQ
    """
    return x.sqrt()
