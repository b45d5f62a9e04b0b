from fractions import Fraction
import pytest
from ..PowerSeries import SeriesQ, rational_sqrt, series_arith, series_sqrt, DEFAULT_ORDER
from ..errors import DivisionByZeroSeries, NotAPerfectSquareConstant

def test_rational_sqrt():
    "test the rational_sqrt function"

    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(0) == 0

    with pytest.raises(NotAPerfectSquareConstant):
        rational_sqrt(2)

    with pytest.raises(NotAPerfectSquareConstant):
        rational_sqrt(-4)

def test_SeriesQ():
    "test the SeriesQ class"

    x = SeriesQ([1, 2, 3], 5)
    assert x.order == 5
    assert len(x) == 5
    assert x.coefficients == (1, 2, 3, 0, 0)
    assert x[2] == 3
    assert list(x) == [1, 2, 3, 0, 0]
    assert SeriesQ([1, 2, 3], 2) == SeriesQ([1, 2])
    assert x.truncate(2) == SeriesQ([1, 2])

    s = SeriesQ.variable(4)
    assert s == SeriesQ([0, 1, 0, 0])
    assert SeriesQ.constant(3).order == DEFAULT_ORDER

    # mixed orders truncate to the smaller one
    assert (x + SeriesQ([1, 1], 3)).order == 3
    assert x + 1 == SeriesQ([2, 2, 3, 0, 0])
    assert 1 - x == SeriesQ([0, -2, -3, 0, 0])
    assert 2*x == SeriesQ([2, 4, 6, 0, 0])
    assert x/2 == SeriesQ(["1/2", 1, "3/2", 0, 0])

    assert s.scale(3) == SeriesQ([0, 3, 0, 0])
    assert s.shift(2) == SeriesQ([0, 0, 0, 1, 0, 0])
    assert s.divide_by_s() == SeriesQ([1, 0, 0])

    with pytest.raises(DivisionByZeroSeries):
        x.divide_by_s()

    with pytest.raises(DivisionByZeroSeries):
        x/0

    with pytest.raises(AssertionError):
        x.truncate(6)

def test_series_arith():
    "test the series_arith function"

    one_plus = SeriesQ([1, 1], 3)
    one_minus = SeriesQ([1, -1], 3)
    assert series_arith(one_plus, one_minus, "mul") == SeriesQ([1, 0, -1])
    assert series_arith(one_plus, one_minus, "add") == SeriesQ([2, 0, 0])
    assert series_arith(one_plus, one_minus, "sub") == SeriesQ([0, 2, 0])

    geometric = series_arith(SeriesQ.constant(1, 4), SeriesQ([1, -1], 4), "div")
    assert geometric == SeriesQ([1, 1, 1, 1])

    round_trip = SeriesQ([1, -1], 5)*(1/SeriesQ([1, -1], 5))
    assert round_trip == SeriesQ.constant(1, 5)

    with pytest.raises(DivisionByZeroSeries):
        series_arith(one_plus, SeriesQ([0, 1], 3), "div")

    with pytest.raises(ValueError):
        series_arith(one_plus, one_minus, "pow")

def test_series_sqrt():
    "test the series_sqrt function"

    x = SeriesQ([1, -6, 1], 4)
    root = series_sqrt(x)
    assert root == SeriesQ([1, -3, -4, -12])
    assert root*root == x

    assert series_sqrt(SeriesQ([4], 2)) == SeriesQ([2, 0])

    one_plus = SeriesQ([1, 1], 6)
    assert series_sqrt(one_plus)**2 == one_plus

    with pytest.raises(NotAPerfectSquareConstant):
        series_sqrt(SeriesQ([2, 1], 3))

    with pytest.raises(NotAPerfectSquareConstant):
        series_sqrt(SeriesQ([0, 1], 3))

def test_SeriesQ_power():
    "test the power method of SeriesQ"

    one_minus = SeriesQ([1, -1], 5)
    assert one_minus**2 == SeriesQ([1, -2, 1, 0, 0])
    assert one_minus**-1 == SeriesQ([1, 1, 1, 1, 1])
    assert one_minus**0 == SeriesQ.constant(1, 5)

    # (1 - 4s)^(-1/2) generates the central binomial coefficients
    central = SeriesQ([1, -4], 6).power("-1/2")
    assert central == SeriesQ([1, 2, 6, 20, 70, 252])

    half = SeriesQ([1, -4], 6).power(Fraction(3, 2))
    assert half*half == SeriesQ([1, -4], 6)**3

    with pytest.raises(AssertionError):
        one_minus.power("1/3")
