from fractions import Fraction
import pytest
from ..Ensembles import (SymmetryClass, EnsembleParams, map_params, JACOBI_TRANSMISSION, LAGUERRE_DELAY,
                         SELBERG_LIKE, PHYSICAL_PAIRS)
from ..errors import InvalidSymmetryPair, LeadOrderError, ParameterDomainError, NonPhysicalDeltaWarning

def test_SymmetryClass():
    "test the SymmetryClass class"

    for beta, delta in PHYSICAL_PAIRS:
        symmetry = SymmetryClass(beta, delta)
        assert symmetry.beta == beta
        assert symmetry.delta == delta
        assert symmetry.is_physical

    assert SymmetryClass(2).delta == 0
    assert SymmetryClass(4, 2).a == 0
    assert SymmetryClass(2, 0).a == 0
    assert SymmetryClass(1, 0).a == 1
    assert SymmetryClass(1, -1).a == 0
    assert SymmetryClass(2, -1).a == Fraction(-1, 2)
    assert SymmetryClass(2, 1).a == Fraction(1, 2)

    assert SymmetryClass(2, 0) == SymmetryClass(2)
    assert SymmetryClass(2, 0) != SymmetryClass(1, 0)
    assert len(set([SymmetryClass(2), SymmetryClass(2, 0), SymmetryClass(4)])) == 2

    with pytest.raises(InvalidSymmetryPair):
        SymmetryClass(3)

    with pytest.raises(InvalidSymmetryPair):
        SymmetryClass(1, 1)

    with pytest.raises(ParameterDomainError):
        SymmetryClass(1, -2, strict=False)

    with pytest.warns(NonPhysicalDeltaWarning):
        symmetry = SymmetryClass(1, "1/2", strict=False)
    assert symmetry.delta == Fraction(1, 2)
    assert not symmetry.is_physical

def test_EnsembleParams():
    "test the EnsembleParams class"

    params = EnsembleParams(LAGUERRE_DELAY, SymmetryClass(2), 3, b=Fraction(3), w=Fraction(2))
    assert params.beta == 2
    assert params.as_dict() == {"kind": LAGUERRE_DELAY, "beta": 2, "delta": 0, "n": 3, "b": 3, "w": 2}

    with pytest.raises(AssertionError):
        EnsembleParams("Gaussian", SymmetryClass(2), 3)

def test_map_params():
    "test the map_params function"

    params = map_params(SymmetryClass(2), JACOBI_TRANSMISSION, 3, m=5)
    assert params.a == 0
    assert params.b == 2
    assert params.u == Fraction(5, 3)
    assert params.m == 5

    params = map_params(SymmetryClass(1), LAGUERRE_DELAY, 4)
    assert params.b == 5
    assert params.w == 2

    params = map_params(SymmetryClass(4), LAGUERRE_DELAY, 4, w=3)
    assert params.b == 4*2 + Fraction(1, 2) - 1

    params = map_params(SymmetryClass(4, 2), JACOBI_TRANSMISSION, 2, m=2)
    assert params.a == 0
    assert params.b == 0

    params = map_params(SymmetryClass(2), SELBERG_LIKE, 4, u="3/2", v=2)
    assert params.a == 4
    assert params.b == 2

    with pytest.raises(LeadOrderError):
        map_params(SymmetryClass(2), JACOBI_TRANSMISSION, 3, m=2)

    with pytest.raises(ParameterDomainError):
        map_params(SymmetryClass(2), JACOBI_TRANSMISSION, 3)

    with pytest.raises(ParameterDomainError):
        map_params(SymmetryClass(2), SELBERG_LIKE, 3, u=2)

    with pytest.raises(ParameterDomainError):
        map_params(SymmetryClass(2), SELBERG_LIKE, 3, u="1/2", v=2)

    with pytest.raises(ValueError):
        map_params(SymmetryClass(2), "Wishart", 3)

    with pytest.raises(TypeError):
        map_params(2, LAGUERRE_DELAY, 3)

    with pytest.raises(AssertionError):
        map_params(SymmetryClass(2), LAGUERRE_DELAY, 0)
