from fractions import Fraction
import numpy as np
import pytest
from scipy import stats
from ..Moments import moment_jacobi, moment_laguerre_neg
from ..Sampling import sample_ensemble, mc_moment, EigenSample, MCEstimate, _draw
from ..Quadrature import quadrature_moment, JACOBI, LAGUERRE
from ..errors import NonNormalizableDensity, ValidityRangeError

def test_EigenSample():
    "test the EigenSample class"

    sample = EigenSample([0.5, 0.1, 0.3], 7, None)
    assert len(sample) == 3
    assert np.all(sample.values == np.array([0.1, 0.3, 0.5]))
    assert sample.seed == 7

def test_sample_ensemble():
    "test the sample_ensemble function"

    sample = sample_ensemble(JACOBI, 2, 3, seed=4)
    assert len(sample) == 3
    assert sample.seed == 4
    assert sample.params.n == 3
    assert np.all(np.diff(sample.values) >= 0.)
    assert np.all(sample.values >= 0.) and np.all(sample.values <= 1.)
    assert np.all(sample_ensemble(JACOBI, 2, 3, seed=4).values == sample.values)

    sample = sample_ensemble(LAGUERRE, 1, 4, b=5, seed=1)
    assert len(sample) == 4
    assert np.all(sample.values > 0.)

    with pytest.raises(ValueError):
        sample_ensemble("Gaussian", 2, 3)

    with pytest.raises(AssertionError):
        sample_ensemble(JACOBI, 0, 3)

    with pytest.raises(AssertionError):
        sample_ensemble(JACOBI, 2, 3, seed=-1)

    with pytest.raises(NonNormalizableDensity):
        sample_ensemble(LAGUERRE, 2, 3, b=-1)

    with pytest.raises(NonNormalizableDensity):
        sample_ensemble(JACOBI, 1, 3, a=-1)

def test_single_eigenvalue_laws():
    "test that a single eigenvalue follows the Beta and Gamma laws"

    rng = np.random.Generator(np.random.Philox(12))

    values = _draw(rng, JACOBI, 2, 1, 0., 0., 100000)[:, 0]
    assert stats.kstest(values, "uniform").pvalue > 1.e-3

    values = _draw(rng, JACOBI, 1, 1, 1., 0., 100000)[:, 0]
    assert stats.kstest(values, stats.beta(0.5, 1.).cdf).pvalue > 1.e-3

    values = _draw(rng, LAGUERRE, 2, 1, 0., 1., 100000)[:, 0]
    assert stats.kstest(values, stats.gamma(2.).cdf).pvalue > 1.e-3

    # beta = 1 Laguerre at n = 1 is Gamma((b + 1)/2) with scale 2
    values = _draw(rng, LAGUERRE, 1, 1, 0., 4., 100000)[:, 0]
    assert stats.kstest(values, stats.gamma(2.5, scale=2.).cdf).pvalue > 1.e-3

@pytest.mark.parametrize("kind,beta,k,n,a,b,expected",
                         [(JACOBI, 2, 1, 3, 0, 2, Fraction(15, 8)),
                          (JACOBI, 2, 2, 2, 0, 0, Fraction(11, 15)),
                          (JACOBI, 1, 1, 2, 1, 0, Fraction(4, 5)),
                          (JACOBI, 1, 2, 2, 1, 0, Fraction(19, 35)),
                          (JACOBI, 4, 1, 3, 1, 0, Fraction(9, 7)),
                          (JACOBI, 4, 2, 3, 0, 1, None),
                          (LAGUERRE, 2, -1, 2, 0, 2, Fraction(1)),
                          (LAGUERRE, 2, -2, 3, 0, 5, Fraction(1, 5)),
                          (LAGUERRE, 1, -1, 3, 0, 6, Fraction(3, 5)),
                          (LAGUERRE, 1, -2, 8, 0, 9, Fraction(8, 27)),
                          (LAGUERRE, 1, -2, 16, 0, 17, Fraction(16, 119)),
                          (LAGUERRE, 4, -1, 3, 0, 1, Fraction(2)),
                          (LAGUERRE, 4, -2, 5, 0, 3, Fraction(170, 189))])
def test_mc_moment_exact(kind, beta, k, n, a, b, expected):
    "test mc_moment against exact moments for every beta and both ensembles"

    if expected is None:
        # outside the range of the beta = 4 closed form, so compare with quadrature
        reference = quadrature_moment(kind, beta, k, n, a=a, b=b, tol=1.e-9)
    elif kind == JACOBI:
        assert moment_jacobi(beta, k, n, a, b).value == expected
        reference = float(expected)
    else:
        assert moment_laguerre_neg(beta, -k, n, b).value == expected
        reference = float(expected)

    estimate = mc_moment(kind, beta, k, n, a=a, b=b, n_samples=100000, seed=n + 10*beta, processes=2)
    assert estimate.n_samples == 100000
    assert abs(estimate.mean - reference) < 4.*estimate.stderr

def test_mc_moment():
    "test the mc_moment function"

    estimate = mc_moment(LAGUERRE, 2, -1, 2, b=2, n_samples=20000, seed=3, processes=2)
    assert isinstance(estimate, MCEstimate)
    assert estimate.n_samples == 20000
    assert estimate.seed == 3
    assert estimate.stderr > 0.

    # delay-time scaling: n M approaches 2 + 2/n + 6/n^2 at w = 2 and beta = 1
    for n in (8, 16):
        estimate = mc_moment(LAGUERRE, 1, -2, n, b=n + 1, n_samples=50000, seed=n, processes=2)
        expected = float(n*moment_laguerre_neg(1, 2, n, n + 1).value)
        assert abs(n*estimate.mean - expected) < 4.*n*estimate.stderr
        assert abs(expected - (2. + 2./n + 6./n**2)) < 20./n**3

def test_mc_moment_processes():
    "test that mc_moment does not depend on the number of processes"

    serial = mc_moment(JACOBI, 2, 2, 3, n_samples=25000, seed=9, processes=1)
    parallel = mc_moment(JACOBI, 2, 2, 3, n_samples=25000, seed=9, processes=2)
    assert serial.mean == parallel.mean
    assert serial.stderr == parallel.stderr

    other = mc_moment(JACOBI, 2, 2, 3, n_samples=25000, seed=10, processes=2)
    assert other.mean != serial.mean

def test_mc_moment_failures():
    "test situations where mc_moment should fail"

    with pytest.raises(ValidityRangeError):
        mc_moment(LAGUERRE, 2, -1, 2, b=0, n_samples=10)

    with pytest.raises(AssertionError):
        mc_moment(JACOBI, 2, 1, 2, n_samples=1)

    with pytest.raises(AssertionError):
        mc_moment(JACOBI, 2, 1, 2, n_samples=10, processes=0)

    with pytest.raises(ValueError):
        mc_moment("Wishart", 2, 1, 2, n_samples=10)
