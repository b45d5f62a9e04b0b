from fractions import Fraction
import pytest
from ..ExactMath import (as_rational, is_integer, binom_ext, binom_rational, pochhammer, rising_reciprocal,
                         PolyQ, narayana, narayana_poly_coeffs, narayana_poly, jacobi_poly, jacobi_recurrence,
                         connection_coeff, hyp2f1_terminating, gen_bernoulli, gamma_ratio_coeffs)
from ..errors import PoleError, DomainError, NonTerminatingError

def test_as_rational():
    "test the as_rational function"

    assert as_rational(3) == 3
    assert as_rational("3/4") == Fraction(3, 4)
    assert as_rational(" -2 ") == -2
    assert as_rational(Fraction(1, 3)) == Fraction(1, 3)
    assert isinstance(as_rational(3), Fraction)

    with pytest.raises(TypeError):
        as_rational(0.5)

    with pytest.raises(TypeError):
        as_rational(True)

    with pytest.raises(ValueError):
        as_rational("one half")

    assert is_integer(Fraction(4, 2))
    assert not is_integer(Fraction(1, 2))

def test_binom_ext():
    "test the binom_ext function"

    assert binom_ext(5, 2) == 10
    assert binom_ext(-3, 2) == 6
    assert binom_ext(4, -1) == 0
    assert binom_ext(2, 3) == 0
    assert binom_ext(-1, 3) == -1
    assert binom_ext(0, 0) == 1

    for m in range(1, 6):
        for j in range(6):
            assert binom_ext(-m, j) == (-1)**j*binom_ext(m + j - 1, m - 1)

    assert binom_rational("1/2", 2) == Fraction(-1, 8)
    assert binom_rational(7, 3) == 35
    assert binom_rational("1/3", -1) == 0

def test_pochhammer():
    "test the pochhammer function"

    assert pochhammer(3, 2) == 12
    assert pochhammer(3, -1) == Fraction(1, 2)
    assert pochhammer("1/2", 3) == Fraction(15, 8)
    assert pochhammer(5, 0) == 1
    assert pochhammer(-2, 3) == 0

    for x in (Fraction(7, 2), Fraction(5), Fraction(-3, 4)):
        for m in range(1, 4):
            assert pochhammer(x, m)*pochhammer(x + m, -m) == 1

    with pytest.raises(PoleError):
        pochhammer(1, -1)

    with pytest.raises(PoleError):
        pochhammer(3, -4)

def test_rising_reciprocal():
    "test the rising_reciprocal function"

    assert rising_reciprocal(3, 2) == Fraction(1, 12)
    assert rising_reciprocal(3, -1) == 2
    assert rising_reciprocal(1, -1) == 0
    assert rising_reciprocal(3, -4) == 0
    assert rising_reciprocal("1/2", 3) == Fraction(8, 15)

    with pytest.raises(PoleError):
        rising_reciprocal(0, 1)

def test_PolyQ():
    "test the PolyQ class"

    p = PolyQ([1, 2, 0, 0])
    assert p.degree == 1
    assert p.coefficients == (1, 2)
    assert p(3) == 7
    assert p("1/2") == 2

    zero = PolyQ([])
    assert zero.degree == PolyQ.ZERO_DEGREE
    assert zero(5) == 0
    assert PolyQ([0, 0]) == zero

    q = PolyQ([-1, 0, 1])
    assert p + q == PolyQ([0, 2, 1])
    assert p - p == zero
    assert 1 - p == PolyQ([0, -2])
    assert p*q == PolyQ([-1, -2, 1, 2])
    assert (p*zero).degree == -1
    assert p**2 == PolyQ([1, 4, 4])
    assert q.derivative() == PolyQ([0, 2])
    assert PolyQ([5]) == 5

    with pytest.raises(AssertionError):
        p**-1

def test_narayana():
    "test the narayana function"

    assert narayana(3, 2) == 3
    assert narayana(2, 0) == 0
    assert narayana(-2, 1) == 3
    assert narayana(1, 1) == 1

    for k in range(1, 31):
        row_sum = Fraction(0)
        for j in range(k + 1):
            value = narayana(k, j)
            assert value == binom_ext(k, j)*binom_ext(k, j - 1)/k
            assert value >= 0 and value.denominator == 1
            row_sum += value
        # Narayana rows sum to the Catalan numbers
        assert row_sum == binom_ext(2*k, k)/(k + 1)

    with pytest.raises(DomainError):
        narayana(0, 1)

def test_narayana_poly():
    "test the narayana_poly function"

    assert narayana_poly(1, 5) == 5
    assert narayana_poly(2, 1) == 2
    assert narayana_poly(3, 2) == 22
    assert narayana_poly(4, "1/2") == Fraction(1, 2) + Fraction(6, 4) + Fraction(6, 8) + Fraction(1, 16)

    assert narayana_poly_coeffs(3) == PolyQ([0, 1, 3, 1])

    # palindromic: u^(k+1) N_k(1/u) = N_k(u)
    for k in range(1, 10):
        u = Fraction(7, 3)
        assert u**(k + 1)*narayana_poly(k, 1/u) == narayana_poly(k, u)

    with pytest.raises(DomainError):
        narayana_poly(0, 1)

def test_jacobi_poly():
    "test the jacobi_poly function"

    assert jacobi_poly(0, 2, 2, 7) == 1
    assert jacobi_poly(1, 1, 0, 3) == 5
    assert jacobi_poly(4, 0, 0, 1) == 1
    assert jacobi_poly(3, 2, 1, 1) == binom_ext(5, 3)

    for n in range(11):
        for alpha, beta in ((0, 0), (1, 2), (2, 2), (2, 0)):
            for x in (Fraction(-5, 2), Fraction(1, 3), Fraction(2)):
                assert jacobi_poly(n, alpha, beta, x) == jacobi_recurrence(n, alpha, beta, x)
                # symmetry P_n^(a, b)(-x) = (-1)^n P_n^(b, a)(x)
                assert jacobi_poly(n, alpha, beta, -x) == (-1)**n*jacobi_poly(n, beta, alpha, x)

    with pytest.raises(DomainError):
        jacobi_poly(-1, 0, 0, 1)

    with pytest.raises(DomainError):
        jacobi_recurrence(-1, 0, 0, 1)

def test_connection_coeff():
    "test the connection_coeff function"

    for n in range(6):
        for p in (1, 2):
            for alpha, beta in ((0, 0), (1, 2), (2, 1)):
                x = Fraction(-1, 3)
                expansion = sum((connection_coeff(j, p, n, alpha, beta)*jacobi_poly(n - j, alpha, beta + p, x)
                                 for j in range(min(p, n) + 1)), Fraction(0))
                assert expansion == jacobi_poly(n, alpha, beta, x)

def test_hyp2f1_terminating():
    "test the hyp2f1_terminating function"

    assert hyp2f1_terminating(0, 5, 2, 9) == 1
    assert hyp2f1_terminating(-1, 1, 1, "1/2") == Fraction(1, 2)
    assert hyp2f1_terminating(-2, -1, 2, Fraction(1, 3)) == 1 + Fraction(1, 3)

    # P_n^(a, b)(x) = C(n + a, n) 2F1(-n, n + a + b + 1; a + 1; (1 - x)/2)
    for n in range(6):
        for alpha, beta in ((0, 0), (1, 2), (2, 1)):
            x = Fraction(1, 3)
            assert (binom_ext(n + alpha, n)*hyp2f1_terminating(-n, n + alpha + beta + 1, alpha + 1, (1 - x)/2)
                    == jacobi_poly(n, alpha, beta, x))

    with pytest.raises(NonTerminatingError):
        hyp2f1_terminating("1/2", 1, 1, "1/2")

    with pytest.raises(PoleError):
        hyp2f1_terminating(-2, 1, -1, 1)

def test_gen_bernoulli():
    "test the gen_bernoulli function"

    assert gen_bernoulli(0, 3, 5) == 1
    assert gen_bernoulli(1, 1, 0) == Fraction(-1, 2)
    assert gen_bernoulli(2, 2, 1) == Fraction(-1, 6)
    assert gen_bernoulli(2, 1, 0) == Fraction(1, 6)

    for gamma in (Fraction(1, 2), Fraction(3), Fraction(-2, 3)):
        for alpha in (Fraction(0), Fraction(5, 4)):
            assert gen_bernoulli(1, gamma, alpha) == alpha - gamma/2
            assert gen_bernoulli(2, gamma, alpha) == alpha**2 - gamma*alpha + gamma*(3*gamma - 1)/12

    with pytest.raises(DomainError):
        gen_bernoulli(9, 1, 0)

    with pytest.raises(DomainError):
        gen_bernoulli(-1, 1, 0)

    assert gen_bernoulli(9, 1, 0, max_order=10) == 0

def test_gamma_ratio_coeffs():
    "test the gamma_ratio_coeffs function"

    assert gamma_ratio_coeffs(3, 3, 4) == [1, 0, 0, 0, 0]
    assert gamma_ratio_coeffs(1, 0, 2) == [1, 0, 0]
    assert gamma_ratio_coeffs(2, 0, 2) == [1, 1, 0]
    assert gamma_ratio_coeffs(3, 0, 3) == [1, 3, 2, 0]

    for alpha, beta in ((Fraction(1, 2), Fraction(0)), (Fraction(7, 3), Fraction(-1, 4)),
                        (Fraction(-3, 5), Fraction(2)), (Fraction(5), Fraction(11, 2))):
        d = alpha - beta
        c = gamma_ratio_coeffs(alpha, beta, 2)
        assert c[0] == 1
        assert c[1] == d*(alpha + beta - 1)/2
        assert c[2] == d*(d - 1)/2*(3*(alpha + beta - 1)**2 - d - 1)/12

    with pytest.raises(DomainError):
        gamma_ratio_coeffs(1, 0, 9)
