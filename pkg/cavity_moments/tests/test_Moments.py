from fractions import Fraction
import pytest
from numpy.testing import assert_allclose
from ..ExactMath import pochhammer
from ..Moments import (MomentResult, moment_jacobi, moment_jacobi_sum, leading_n_power, moment_laguerre_neg,
                       laguerre_mixed_moment, phi_term, CLOSED_FORM, LOOP_EQUATIONS,
                       moment_selberg_like, selberg_constant, laguerre_constant, OMITTED_PHI_TERM)
from ..errors import ValidityRangeError, ParityError, DomainError, PoleError

def test_MomentResult():
    "test the MomentResult class"

    result = MomentResult(value=Fraction(1, 2), formula="test", flags=frozenset())
    assert result.value == Fraction(1, 2)
    assert result["formula"] == "test"
    assert result.flags == frozenset()

    with pytest.raises(AttributeError):
        result.variance

def test_moment_jacobi_beta2():
    "test the moment_jacobi function for beta = 2"

    result = moment_jacobi(2, 1, 2, 0, 0)
    assert result.value == 1
    assert result.flags == frozenset()
    assert moment_jacobi(2, 2, 2, 0, 0).value == Fraction(11, 15)
    assert moment_jacobi(2, 1, 1, 0, 0).value == Fraction(1, 2)

    # a single eigenvalue follows a Beta(b + 1, a + 1) law
    a = Fraction(1, 2)
    b = Fraction(2)
    for k in range(1, 7):
        assert moment_jacobi(2, k, 1, a, b).value == pochhammer(b + 1, k)/pochhammer(a + b + 2, k)

    for k in range(1, 7):
        for n in range(1, 7):
            for a, b in ((0, 0), (Fraction(-1, 2), 3), (2, Fraction(1, 2))):
                assert moment_jacobi(2, k, n, a, b).value == moment_jacobi_sum(k, n, a, b)

def test_moment_jacobi_beta1_beta4():
    "test the moment_jacobi function for beta = 1 and beta = 4"

    assert moment_jacobi(1, 1, 2, 1, 0).value == Fraction(4, 5)
    assert moment_jacobi(4, 1, 3, 1, 0).value == Fraction(9, 7)
    assert moment_jacobi(1, 1, 3, 0, 2).value == Fraction(15, 8)

    # small n, where single terms of the decomposition have cancelling poles
    assert moment_jacobi(1, 2, 2, 1, 0).value == Fraction(19, 35)
    assert moment_jacobi(1, 3, 2, 1, 0).value == Fraction(44, 105)
    assert moment_jacobi(1, 1, 1, 0, 0).value == Fraction(1, 2)

    # the first moment is Aomoto's integral for every beta
    for beta, n_values in ((1, (2, 3, 4)), (4, (3, 4))):
        for n in n_values:
            for a, b in ((0, 0), (1, 0), (0, 2), (1, 2)):
                assert moment_jacobi(beta, 1, n, a, b).value == Fraction(n*(b + n), a + b + 2*n)

    assert moment_jacobi(1, 2, 2, 0, 0).formula == "jacobi-beta1-decomposition"
    assert moment_jacobi(4, 2, 5, 0, 0).formula == "jacobi-beta4-decomposition"

    with pytest.raises(ValidityRangeError):
        moment_jacobi(1, 4, 2, 0, 0)

    with pytest.raises(ValidityRangeError):
        moment_jacobi(4, 1, 2, 0, 0)

    with pytest.raises(ValidityRangeError):
        moment_jacobi(2, 0, 2, 0, 0)

    with pytest.raises(ValueError):
        moment_jacobi(3, 1, 2, 0, 0)

    with pytest.raises(AssertionError):
        moment_jacobi(2, 1, 0, 0, 0)

def test_moment_jacobi_monotone():
    "test that Jacobi moments decrease with the order"

    for beta in (1, 2, 4):
        for n in range(1, 9):
            for a, b in ((0, 0), (Fraction(1, 2), 1), (0, 3)):
                values = [moment_jacobi(beta, k, n, a, b).value for k in range(1, 7) if 2*n > k*beta]
                for first, second in zip(values[:-1], values[1:]):
                    assert first >= second >= 0

def test_leading_n_power():
    "test the leading_n_power function"

    for k in range(1, 9):
        for j in range(1, k + 1):
            assert leading_n_power(k, j) == 1

def test_moment_laguerre_neg():
    "test the moment_laguerre_neg function"

    assert moment_laguerre_neg(2, 1, 1, 1).value == 1
    assert moment_laguerre_neg(2, 1, 2, 2).value == 1

    # delay-time parameter b = n gives a unit first moment
    for n in range(1, 11):
        assert moment_laguerre_neg(2, 1, n, n).value == 1

    # inverse moments of complex Wishart matrices
    for n in range(1, 5):
        for b in (Fraction(2), Fraction(5, 2), Fraction(4)):
            assert moment_laguerre_neg(2, 1, n, b).value == n/b
            if n > 1:
                assert moment_laguerre_neg(2, 2, n, b).value == n*(n + b)/(b*(b*b - 1))
    assert moment_laguerre_neg(2, 2, 3, 3).value == Fraction(3, 4)

    with pytest.raises(ValidityRangeError):
        moment_laguerre_neg(2, 3, 2, 2)

    with pytest.raises(ValidityRangeError):
        moment_laguerre_neg(2, 2, 1, 3)

    with pytest.raises(ValueError):
        moment_laguerre_neg(3, 1, 2, 2)

def test_moment_laguerre_neg_beta1_beta4():
    "test the moment_laguerre_neg function for beta = 1 and beta = 4"

    # beta = 4 closed form: <sum 1/x> = 2n/(2b + 1)
    assert moment_laguerre_neg(4, 1, 3, 1).value == 2
    for n in range(3, 7):
        for b in (Fraction(1), Fraction(5, 2)):
            result = moment_laguerre_neg(4, 1, n, b)
            assert result.value == 2*n/(2*b + 1)
            assert result.formula == "laguerre-beta4-decomposition"
            assert result.flags == frozenset()

    # beta = 4 second moment 2n(2b + 2n + 1)/((2b + 1) b (2b + 3))
    for n in (5, 6):
        for b in (Fraction(1), Fraction(5, 2)):
            expected = 2*n*(2*b + 2*n + 1)/((2*b + 1)*b*(2*b + 3))
            assert moment_laguerre_neg(4, 2, n, b).value == expected
            assert moment_laguerre_neg(4, 2, n, b, method=LOOP_EQUATIONS).value == expected

    # beta = 1 defaults to the exact real Wishart inverse moments, for odd n too
    for n in range(1, 6):
        for b in (Fraction(7, 2), Fraction(6), Fraction(9)):
            result = moment_laguerre_neg(1, 1, n, b)
            assert result.value == n/(b - 1)
            assert result.formula == "laguerre-loop-equations"
            assert result.flags == frozenset()
            if n > 2:
                assert moment_laguerre_neg(1, 2, n, b).value == n*(n + b - 1)/((b - 1)*b*(b - 3))

    # delay-time exponent b = n + 1
    for n in (8, 16):
        assert moment_laguerre_neg(1, 2, n, n + 1).value == Fraction(2*n, (n + 1)*(n - 2))

    # the beta = 1 decomposition is available on request and carries a flag
    for b in (Fraction(2), Fraction(7, 2), Fraction(6)):
        result = moment_laguerre_neg(1, 1, 2, b, method=CLOSED_FORM)
        assert result.value == 2/b
        assert result.formula == "laguerre-beta1-decomposition"
        assert result.flags == frozenset([OMITTED_PHI_TERM])
        assert moment_laguerre_neg(1, 1, 4, b, method=CLOSED_FORM).value == 4*(b + 3)/(b*(b + 2))

    with pytest.raises(ParityError):
        moment_laguerre_neg(1, 1, 3, 4, method=CLOSED_FORM)

    with pytest.raises(ValidityRangeError):
        moment_laguerre_neg(1, 3, 2, 4)

    with pytest.raises(ValidityRangeError):
        moment_laguerre_neg(1, 2, 2, 6, method=CLOSED_FORM)

    with pytest.raises(ValidityRangeError):
        moment_laguerre_neg(4, 1, 2, 1)

    with pytest.raises(ValidityRangeError):
        moment_laguerre_neg(4, 2, 4, 1)

    with pytest.raises(ValueError):
        moment_laguerre_neg(1, 1, 2, 4, method="quadrature")

    # loop equations cover the range the beta = 4 closed form leaves out
    assert moment_laguerre_neg(4, 1, 2, 1, method=LOOP_EQUATIONS).value == Fraction(4, 3)

def test_moment_laguerre_neg_methods():
    "test that both methods agree where the closed forms are exact"

    for k in range(1, 5):
        for n in range(2, 6):
            if 2*(k - 1) >= 2*n:
                continue
            for b in (Fraction(9, 2), Fraction(7)):
                closed = moment_laguerre_neg(2, k, n, b)
                loop = moment_laguerre_neg(2, k, n, b, method=LOOP_EQUATIONS)
                assert closed.value == loop.value

def test_laguerre_mixed_moment():
    "test the laguerre_mixed_moment function"

    # complex Wishart: <(sum 1/x)^2> = (n^2/b + <sum 1/x^2>)/b
    assert laguerre_mixed_moment(2, (1, 1), 2, 3) == Fraction(7, 12)
    assert laguerre_mixed_moment(2, [1, 1], 2, 3) == laguerre_mixed_moment(2, (1, 1), 2, "3")
    assert laguerre_mixed_moment(2, (), 4, 3) == 1

    # a single eigenvalue has p_(-1)^2 = p_(-2)
    for beta in (1, 2, 4):
        for b in (Fraction(9), Fraction(21, 2)):
            assert laguerre_mixed_moment(beta, (1, 1), 1, b) == laguerre_mixed_moment(beta, (2,), 1, b)
            assert laguerre_mixed_moment(beta, (2, 1), 1, b) == laguerre_mixed_moment(beta, (3,), 1, b)
    assert laguerre_mixed_moment(1, (2,), 1, 9) == Fraction(1, 48)

    with pytest.raises(PoleError):
        laguerre_mixed_moment(1, (1,), 2, 1)

    with pytest.raises(AssertionError):
        laguerre_mixed_moment(1, (0,), 2, 4)

    with pytest.raises(AssertionError):
        laguerre_mixed_moment(-1, (1,), 2, 4)

def test_phi_term():
    "test the remainder left out of the beta = 1 decomposition"

    for b in (Fraction(4), Fraction(11, 2), Fraction(10)):
        assert phi_term(1, 2, b) == 2/(b*(b - 1))
        assert phi_term(1, 4, b) == 12/((b - 1)*b*(b + 2))
        # relative size 1/b at n = 2, so it does not vanish with n at fixed b
        assert phi_term(1, 2, b)/moment_laguerre_neg(1, 1, 2, b).value == 1/b
    assert phi_term(1, 2, 4) == phi_term(1, 4, 4) == Fraction(1, 6)

    with pytest.raises(ParityError):
        phi_term(1, 3, 4)

def test_moment_selberg_like():
    "test the moment_selberg_like function"

    assert moment_selberg_like(2, 1, 2, 1, 1).value == 1
    assert moment_selberg_like(2, 1, 2, 2, 1).value == Fraction(4, 3)
    result = moment_selberg_like(2, 2, 2, 2, 2)
    assert result.value == moment_jacobi(2, 2, 2, 2, 2).value
    assert result.formula.startswith("selberg-like/")

def test_selberg_constant():
    "test the selberg_constant function"

    assert_allclose(float(selberg_constant(2, 0, 0, 1)), 1.)
    assert_allclose(float(selberg_constant(2, 0, 0, 2)), 1./6.)
    assert_allclose(float(selberg_constant(1, 1, 1, 2)), 1./3.)
    assert_allclose(float(selberg_constant(2, 1, 2, 1)), 1./12.)

    with pytest.raises(DomainError):
        selberg_constant(2, -1, 0, 1)

def test_laguerre_constant():
    "test the laguerre_constant function"

    assert_allclose(float(laguerre_constant(2, 1, 1)), 1.)
    assert_allclose(float(laguerre_constant(1, 1, 1)), 2.)
    assert_allclose(float(laguerre_constant(2, 0, 2)), 2.)

    with pytest.raises(DomainError):
        laguerre_constant(2, -1, 1)
