"""
Monte Carlo oracles from tridiagonal beta-ensemble matrix models

Laguerre eigenvalues come from the bidiagonal chi construction and Jacobi
eigenvalues from a tridiagonal matrix assembled from independent
beta-distributed canonical coordinates. Both models are valid for every
``beta > 0`` and real exponent parameters, so a single sampler covers the
Dyson classes and the half-integer exponents of the Andreev classes.

Random numbers come from ``numpy.random.Philox``, a counter-based generator:
chunk ``c`` of a Monte Carlo run uses ``Philox(seed).jumped(c + 1)``, so the
draws do not depend on the number of processes.
"""

import platform
from functools import partial
from multiprocessing import Pool
import numpy as np
from .ExactMath import as_rational
from .Ensembles import SymmetryClass, EnsembleParams, JACOBI_TRANSMISSION, LAGUERRE_DELAY
from .Quadrature import JACOBI, LAGUERRE
from .errors import NonNormalizableDensity, ValidityRangeError

DEFAULT_SAMPLES = 100000
CHUNK_SIZE = 10000

class EigenSample(object):
    """
    One draw of ensemble eigenvalues

    :ivar values: Eigenvalues in ascending order
    :type values: ndarray
    :ivar seed: Seed of the draw
    :type seed: int
    :ivar params: Ensemble parameters
    :type params: EnsembleParams
    """
    def __init__(self, values, seed, params):
        self.values = np.sort(np.array(values, dtype=float))
        self.seed = seed
        self.params = params

    def __len__(self):
        return len(self.values)

    def __repr__(self):
        return "EigenSample(values={}, seed={})".format(list(self.values), self.seed)

class MCEstimate(dict):
    """
    Monte Carlo estimate of a moment

    Dictionary-like object with keys ``'mean'``, ``'stderr'`` (sample
    standard deviation divided by the square root of the number of draws),
    ``'n_samples'`` and ``'seed'``, also readable as attributes.
    """

    def __getattr__(self, name):
        try:
            return self[name]
        except KeyError:
            raise AttributeError(name)

    __setattr__ = dict.__setitem__
    __delattr__ = dict.__delitem__

def _check_ensemble(kind, beta, n, a, b):
    "validate the ensemble arguments and return float exponent parameters"
    if kind not in (JACOBI, LAGUERRE):
        raise ValueError("unknown ensemble kind '{}'".format(kind))
    assert beta > 0, "Dyson index must be positive"
    assert int(n) == n and n >= 1, "number of eigenvalues must be a positive integer"
    a = as_rational(a)
    b = as_rational(b)
    if beta*(b + 1) <= 0:
        raise NonNormalizableDensity("weight exponent beta/2 (b + 1) - 1 must exceed -1, got b = {}".format(b))
    if kind == JACOBI and beta*(a + 1) <= 0:
        raise NonNormalizableDensity("weight exponent beta/2 (a + 1) - 1 must exceed -1, got a = {}".format(a))
    return a, b

def _jacobi_eigenvalues(rng, beta, n, a, b, size):
    """
    Jacobi eigenvalues on [0, 1] from beta-distributed canonical coordinates

    Draws the coordinates ``alpha_0, ..., alpha_(2n-2)`` on [-1, 1], builds the
    tridiagonal matrix on [-2, 2] whose spectral measure they parametrize and
    maps its eigenvalues by ``x = (2 + lambda)/4``.
    """
    exponent_a = beta/2.*(a + 1.) - 1.
    exponent_b = beta/2.*(b + 1.) - 1.

    # alpha[:, j + 1] holds alpha_j, with alpha_(-1) = alpha_(2n-1) = -1
    alpha = np.empty((size, 2*n + 1))
    alpha[:, 0] = -1.
    alpha[:, 2*n] = -1.
    for j in range(2*n - 1):
        if j % 2 == 0:
            s = (2*n - j - 2)*beta/4. + exponent_a + 1.
            t = (2*n - j - 2)*beta/4. + exponent_b + 1.
        else:
            s = (2*n - j - 3)*beta/4. + exponent_a + exponent_b + 2.
            t = (2*n - j - 1)*beta/4.
        # density proportional to (1 - y)^(s - 1) (1 + y)^(t - 1)
        alpha[:, j + 1] = 2.*rng.beta(t, s, size) - 1.

    coordinate = lambda j: alpha[:, j + 1] if j >= -1 else np.zeros(size)

    matrix = np.zeros((size, n, n))
    for j in range(n):
        matrix[:, j, j] = ((1. - coordinate(2*j - 1))*coordinate(2*j)
                           - (1. + coordinate(2*j - 1))*coordinate(2*j - 2))
    for j in range(n - 1):
        product = (1. - coordinate(2*j - 1))*(1. - coordinate(2*j)**2)*(1. + coordinate(2*j + 1))
        off_diagonal = np.sqrt(np.maximum(product, 0.))
        matrix[:, j, j + 1] = off_diagonal
        matrix[:, j + 1, j] = off_diagonal

    return np.clip((2. + np.linalg.eigvalsh(matrix))/4., 0., 1.)

def _laguerre_eigenvalues(rng, beta, n, b, size):
    """
    Laguerre eigenvalues from the bidiagonal chi construction

    The lower bidiagonal matrix has chi-distributed entries with ``2 c - beta i``
    degrees of freedom on the diagonal, ``c = beta/2 (b + n)``, and
    ``beta (n - 1 - i)`` below it. The eigenvalues of ``B B^T`` divided by
    ``beta`` follow the Laguerre density.
    """
    shape = beta*(b + n)
    diagonal_squares = [rng.chisquare(shape - beta*i, size) for i in range(n)]
    lower = [np.sqrt(rng.chisquare(beta*(n - 1 - i), size)) for i in range(n - 1)]

    matrix = np.zeros((size, n, n))
    for i in range(n):
        matrix[:, i, i] = diagonal_squares[i] + (lower[i - 1]**2 if i > 0 else 0.)
    for i in range(n - 1):
        off_diagonal = np.sqrt(diagonal_squares[i])*lower[i]
        matrix[:, i, i + 1] = off_diagonal
        matrix[:, i + 1, i] = off_diagonal

    return np.linalg.eigvalsh(matrix)/beta

def _draw(rng, kind, beta, n, a, b, size):
    "array of shape (size, n) of sorted eigenvalues"
    if kind == JACOBI:
        return _jacobi_eigenvalues(rng, beta, n, float(a), float(b), size)
    return _laguerre_eigenvalues(rng, beta, n, float(b), size)

def sample_ensemble(kind, beta, n, a=0, b=0, seed=0):
    """
    Draw the eigenvalues of one Jacobi or Laguerre beta-ensemble matrix

    The Jacobi density on [0, 1] has weight
    ``x^(beta/2 (b+1) - 1) (1 - x)^(beta/2 (a+1) - 1)`` and the Laguerre
    density on ``(0, inf)`` has weight ``x^(beta/2 (b+1) - 1) exp(-beta x/2)``,
    both times ``|Delta(x)|^beta``. The draw is determined by ``seed``.

    :param kind: ``'Jacobi'`` or ``'Laguerre'``
    :type kind: str
    :param beta: Dyson index
    :type beta: int
    :param n: Number of eigenvalues
    :type n: int
    :param a: Exponent parameter of ``(1 - x)`` (Jacobi only, optional,
              default is 0)
    :type a: int, Fraction or str
    :param b: Exponent parameter of ``x`` (optional, default is 0)
    :type b: int, Fraction or str
    :param seed: Seed of the Philox generator (optional, default is 0)
    :type seed: int
    :returns: Sorted eigenvalues with the seed and parameters
    :rtype: EigenSample
    """
    a, b = _check_ensemble(kind, beta, n, a, b)
    assert int(seed) == seed and seed >= 0, "seed must be a non-negative integer"
    n = int(n)
    seed = int(seed)

    rng = np.random.Generator(np.random.Philox(seed))
    values = _draw(rng, kind, beta, n, a, b, 1)[0]

    if kind == JACOBI:
        params = EnsembleParams(JACOBI_TRANSMISSION, SymmetryClass(beta), n, a=a, b=b)
    else:
        params = EnsembleParams(LAGUERRE_DELAY, SymmetryClass(beta), n, b=b)
    return EigenSample(values, seed, params)

def _chunk_moment(kind, beta, k, n, a, b, seed, chunk, size):
    "power sums of one chunk of draws"
    rng = np.random.Generator(np.random.Philox(seed).jumped(chunk + 1))
    values = _draw(rng, kind, beta, n, a, b, size)
    return np.sum(values**k, axis=1)

def mc_moment(kind, beta, k, n, a=0, b=0, n_samples=DEFAULT_SAMPLES, seed=0, processes=None, verbose=False):
    """
    Monte Carlo estimate of the moment ``<sum_j x_j^k>``

    Draws are made in chunks of ``CHUNK_SIZE``, each with its own Philox
    stream derived from ``seed``, and the chunks are evaluated in parallel
    with ``multiprocessing.Pool`` (serially on Windows). The estimate is
    identical for any number of processes. Negative ``k`` require the moment
    to be finite, ``beta/2 (b + 1) + k > 0``; for the delay-time exponent
    this is ``-k < n beta/2 + 1``.

    :param kind: ``'Jacobi'`` or ``'Laguerre'``
    :type kind: str
    :param beta: Dyson index
    :type beta: int
    :param k: Signed moment order
    :type k: int
    :param n: Number of eigenvalues
    :type n: int
    :param a: Exponent parameter of ``(1 - x)`` (Jacobi only, optional,
              default is 0)
    :type a: int, Fraction or str
    :param b: Exponent parameter of ``x`` (optional, default is 0)
    :type b: int, Fraction or str
    :param n_samples: Number of draws, at least 2 (optional, default is
                      ``DEFAULT_SAMPLES``)
    :type n_samples: int
    :param seed: Root seed (optional, default is 0)
    :type seed: int
    :param processes: Number of processes (optional, default is ``None``,
                      which uses the number of CPUs)
    :type processes: int or None
    :param verbose: Print a summary when finished (optional, default is
                    ``False``)
    :type verbose: bool
    :returns: Mean and standard error of the power sum
    :rtype: MCEstimate
    """
    a, b = _check_ensemble(kind, beta, n, a, b)
    assert int(k) == k, "moment order must be an integer"
    assert int(n_samples) == n_samples and n_samples >= 2, "at least two samples are required"
    assert int(seed) == seed and seed >= 0, "seed must be a non-negative integer"
    if not processes is None:
        processes = int(processes)
        assert processes > 0, "number of processes must be positive"
    k = int(k)
    n = int(n)
    n_samples = int(n_samples)
    seed = int(seed)

    if k < 0 and beta*(b + 1)/2 + k <= 0:
        raise ValidityRangeError("moment of order {} is infinite for b = {} and beta = {}".format(k, b, beta))

    sizes = [CHUNK_SIZE]*(n_samples//CHUNK_SIZE)
    if n_samples % CHUNK_SIZE > 0:
        sizes.append(n_samples % CHUNK_SIZE)

    chunk = partial(_chunk_moment, kind, beta, k, n, a, b, seed)
    if platform.system() == "Windows" or len(sizes) < 2:
        power_sums = [chunk(c, size) for (c, size) in enumerate(sizes)]
    else:
        with Pool(processes) as p:
            power_sums = p.starmap(chunk, list(enumerate(sizes)))

    power_sums = np.concatenate(power_sums)
    mean = float(np.mean(power_sums))
    stderr = float(np.std(power_sums, ddof=1)/np.sqrt(n_samples))

    if verbose:
        print("{} draws in {} chunks: mean = {:.10g}, stderr = {:.3g}".format(n_samples, len(sizes), mean, stderr))

    return MCEstimate(mean=mean, stderr=stderr, n_samples=n_samples, seed=seed)
