import pytest
from fractions import Fraction
from ..Identities import run_suite, check_identity, selberg_quadratic, IdentityReport, SUITES, SUITE_NAMES
from ..GeneratingFunctions import GenFunId, genfun_eval
from ..PowerSeries import SeriesQ
from ..Ensembles import SymmetryClass
from ..Asymptotics import delay_coeff, trans_coeff, selberg_like_coeff, is_conjectured
from ..errors import ConjectureWarning

def test_run_suite():
    "test that every identity suite passes"

    for name in SUITES:
        reports = run_suite(name, kmax=6)
        assert len(reports) == len(SUITES[name])
        for report in reports:
            assert report.suite == name
            assert report.checks > 0
            assert report.passed, "{}: {}".format(report.name, report.failures)
            assert report.failures == []

def test_run_suite_defaults():
    "test the run_suite function at the default orders"

    for report in run_suite("coker") + run_suite("recurrence"):
        assert report.passed, "{}: {}".format(report.name, report.failures)

    reports = run_suite("all", kmax=2)
    assert len(reports) == sum(len(identities) for identities in SUITES.values())
    assert "all" in SUITE_NAMES

    with pytest.raises(ValueError):
        run_suite("lemmas")

    with pytest.raises(AssertionError):
        run_suite("coker", kmax=0)

def test_check_identity():
    "test that check_identity reports mismatches"

    def broken(kmax):
        for k in range(1, kmax + 1):
            yield ("k={}".format(k), k, 1)

    report = check_identity("broken", "test", broken, 8)
    assert isinstance(report, IdentityReport)
    assert report.checks == 8
    assert not report.passed
    assert len(report.failures) == IdentityReport.MAX_FAILURES
    assert report.failures[0] == "k=2: 2 != 1"

    def raising(kmax):
        yield ("k=1", 1, 1)
        yield ("k=2", delay_coeff(4, 2, 2, 2), 0)

    report = check_identity("raising", "test", raising, 2)
    assert report.checks == 1
    assert not report.passed
    assert report.failures[0].startswith("UnsupportedOrderError:")

    # a passing identity has no failures
    report = check_identity("constant", "test", lambda kmax: (("k={}".format(k), k, k) for k in range(kmax)), 3)
    assert report.passed
    assert report.checks == 3

def test_run_suite_alias():
    "test that the second-order suite can be run under its alias"

    assert "appendix-d" in SUITE_NAMES
    reports = run_suite("appendix-d", kmax=3)
    assert [report.name for report in reports] == [name for name, _, _ in SUITES["second-order"]]
    for report in reports:
        assert report.suite == "second-order"
        assert report.passed, "{}: {}".format(report.name, report.failures)

def test_selberg_fixed_point():
    "test the Selberg-like generating function and its quadratic equation"

    # u = v = 1 is the arcsine law with moments C(2k, k)/4^k
    h = genfun_eval(GenFunId("SelbergH", u=1, v=1), 6)
    assert h[0] == 0
    assert [h[k] for k in range(1, 4)] == [Fraction(1, 2), Fraction(3, 8), Fraction(5, 16)]
    for k in range(1, 6):
        assert h[k] == selberg_like_coeff(2, k, 0, 1, 1)

    u = Fraction(3)
    v = Fraction(5, 2)
    order = 12
    h = genfun_eval(GenFunId("SelbergH", u=u, v=v), order)
    s = SeriesQ.variable(order)
    denominator = (u + v - (1 + u)*s).inverse()
    assert h == u*s*denominator - (1 - s)*denominator*h*h
    assert h[1] == u/(u + v)

    report = check_identity("selberg_quadratic", "selberg", selberg_quadratic, 8)
    assert report.passed
    assert report.checks == 5

def test_conjectured_family():
    "test the conjectured beta = 1 transmission family with delta != 0"

    assert is_conjectured(1, -1, 2)
    assert is_conjectured(1, 2, 2)
    assert not is_conjectured(1, 0, 2)
    assert not is_conjectured(2, -1, 2)
    assert not is_conjectured(1, -1, 1)

    genfun_id = GenFunId("T2_beta1_delta_conjectured", u=2, delta=-1)
    assert genfun_id.conjecture
    with pytest.warns(ConjectureWarning):
        series = genfun_eval(genfun_id, 8)
    assert series.conjecture

    # the delta terms drop out at delta = 0
    with pytest.warns(ConjectureWarning):
        conjectured = genfun_eval(GenFunId("T2_beta1_delta_conjectured", u=2, delta=0), 8)
    proven = genfun_eval(GenFunId("T2_beta1_delta0", u=2), 8)
    assert conjectured == proven
    assert not proven.conjecture

    with pytest.warns(ConjectureWarning):
        value = trans_coeff(SymmetryClass(1, -1), 3, 2, 2)
    with pytest.warns(ConjectureWarning):
        assert value == genfun_eval(GenFunId("T2_beta1_delta_conjectured", u=2, delta=-1), 4)[3]
