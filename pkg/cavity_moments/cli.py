"""
Command-line interface

``cavity-moments <command> [options]`` computes exact moments, expansion
coefficients, generating-function series, identity reports, Monte Carlo and
quadrature oracles and remainder tables. Output is JSON (default) or CSV on
stdout. Rationals are printed as exact ``"p/q"`` strings next to a decimal
rendering, and every run echoes the package version, the seed and the exact
inputs.

Exit codes: 0 on success, 1 when a domain or validity precondition fails,
2 when two independent routes to an exact quantity disagree or an identity
check fails. Nothing is written to stdout when a command fails.
"""

import argparse
import csv
import io
import json
import logging
import sys
import warnings
from fractions import Fraction
from mpmath import mp
from .version import version
from .ExactMath import as_rational
from .Ensembles import SymmetryClass, map_params, LAGUERRE_DELAY
from .GeneratingFunctions import GenFunId, genfun_eval, FAMILY_PARAMETERS
from .Moments import moment_jacobi, moment_laguerre_neg, moment_selberg_like, CLOSED_FORM, LOOP_EQUATIONS
from .Asymptotics import (delay_coeff, trans_coeff, selberg_like_coeff, is_conjectured,
                          remainder_scan, TRANSMISSION, DELAY, SELBERG_LIKE)
from .Identities import run_suite, SUITE_NAMES
from .Sampling import sample_ensemble, mc_moment, DEFAULT_SAMPLES
from .Quadrature import (limiting_density, limiting_moment, quadrature_moment, marchenko_pastur_support,
                         jacobi_limit_support, JACOBI, LAGUERRE, MARCHENKO_PASTUR, JACOBI_LIMIT)
from .PowerSeries import DEFAULT_ORDER
from .errors import CavityMomentsError, InternalIdentityViolation

logger = logging.getLogger("cavity_moments")

DEFAULT_DIGITS = 30

ENSEMBLES = {"jacobi": JACOBI, "laguerre": LAGUERRE, "selberg-like": SELBERG_LIKE}
TARGETS = {"transmission": TRANSMISSION, "delay": DELAY, "selberg-like": SELBERG_LIKE}
DENSITIES = {"marchenko-pastur": MARCHENKO_PASTUR, "jacobi-limit": JACOBI_LIMIT}

class UsageError(Exception):
    "invalid flag combination"
    pass

class _Parser(argparse.ArgumentParser):
    "argument parser that reports usage errors with exit code 1"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, "{}: error: {}\n".format(self.prog, message))

def _rational(value):
    "argparse type for exact rational flags"
    try:
        return as_rational(value)
    except (TypeError, ValueError):
        raise argparse.ArgumentTypeError("'{}' is not an integer or p/q rational".format(value))

def _int_list(value):
    try:
        return [int(item) for item in value.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("'{}' is not a comma separated list of integers".format(value))

def _decimal(value, digits):
    "decimal rendering of a rational or float at the given number of significant digits"
    with mp.workdps(digits + 10):
        if isinstance(value, Fraction):
            number = mp.mpf(value.numerator)/value.denominator
        else:
            number = mp.mpf(value)
        return mp.nstr(number, digits)

def _exact(value, digits):
    "exact string and decimal rendering of a rational"
    value = Fraction(value)
    return {"value": str(value), "value_decimal": _decimal(value, digits)}

def _require(args, *names):
    missing = [name for name in names if getattr(args, name) is None]
    if missing:
        raise UsageError("command '{}' requires {}".format(args.command, ", ".join("--" + name for name in missing)))

def _symmetry(args):
    "symmetry class from the flags, warning for non-physical pairs"
    return SymmetryClass(args.beta, args.delta, strict=False)

# commands

def _moment(args):
    _require(args, "k", "n")
    if args.ensemble == "jacobi":
        result = moment_jacobi(args.beta, args.k, args.n, args.a, args.b)
    elif args.ensemble == "laguerre":
        b = args.b
        if not args.w is None:
            b = map_params(SymmetryClass(args.beta), LAGUERRE_DELAY, args.n, w=args.w).b
        result = moment_laguerre_neg(args.beta, args.k, args.n, b, method=args.method)
    else:
        _require(args, "u", "v")
        result = moment_selberg_like(args.beta, args.k, args.n, args.u, args.v)
    row = {"k": args.k, "n": args.n, "p": ""}
    row.update(_exact(result.value, args.digits))
    row["formula"] = result.formula
    row["flags"] = ";".join(sorted(result.flags))
    return [row]

def _coeff(args):
    _require(args, "k", "p")
    conjecture = False
    if args.target == "delay":
        _require(args, "w")
        value = delay_coeff(args.beta, args.k, args.p, args.w)
    elif args.target == "transmission":
        _require(args, "u")
        symmetry = _symmetry(args)
        conjecture = is_conjectured(symmetry.beta, symmetry.delta, args.p)
        value = trans_coeff(symmetry, args.k, args.p, args.u)
    else:
        _require(args, "u", "v")
        value = selberg_like_coeff(args.beta, args.k, args.p, args.u, args.v)
    row = {"k": args.k, "n": "", "p": args.p}
    row.update(_exact(value, args.digits))
    row["flags"] = ""
    row["conjecture"] = conjecture
    return [row]

def _genfun(args):
    _require(args, "family")
    given = {"u": args.u, "v": args.v, "w": args.w, "beta": args.beta, "delta": args.delta}
    params = {name: given[name] for name in FAMILY_PARAMETERS[args.family]}
    series = genfun_eval(GenFunId(args.family, **params), args.order)
    rows = []
    for k in range(args.order):
        row = {"k": k, "n": "", "p": ""}
        row.update(_exact(series[k], args.digits))
        row["flags"] = ""
        row["conjecture"] = series.conjecture
        rows.append(row)
    return rows

def _selberg(args):
    _require(args, "k", "u", "v")
    rows = []
    if not args.n is None:
        result = moment_selberg_like(args.beta, args.k, args.n, args.u, args.v)
        row = {"k": args.k, "n": args.n, "p": ""}
        row.update(_exact(result.value, args.digits))
        row["flags"] = ";".join(sorted(result.flags))
        rows.append(row)
    for p in (0, 1):
        row = {"k": args.k, "n": "", "p": p}
        row.update(_exact(selberg_like_coeff(args.beta, args.k, p, args.u, args.v), args.digits))
        row["flags"] = ""
        rows.append(row)
    return rows

def _verify(args):
    rows = []
    for report in run_suite(args.suite, args.kmax):
        logger.info("%s/%s: %d checks, passed = %s", report.suite, report.name, report.checks, report.passed)
        rows.append({"suite": report.suite, "identity": report.name, "checks": report.checks,
                     "passed": report.passed, "failures": "; ".join(report.failures)})
    return rows

def _sample(args):
    _require(args, "n")
    if args.ensemble not in ("jacobi", "laguerre"):
        raise UsageError("command 'sample' supports the jacobi and laguerre ensembles")
    kind = ENSEMBLES[args.ensemble]
    if args.k is None:
        sample = sample_ensemble(kind, args.beta, args.n, args.a, args.b, args.seed)
        return [{"j": j + 1, "n": args.n, "value_decimal": repr(float(x))} for j, x in enumerate(sample.values)]
    estimate = mc_moment(kind, args.beta, args.k, args.n, args.a, args.b, args.samples, args.seed,
                         processes=args.processes)
    row = {"k": args.k, "n": args.n, "mean": repr(estimate.mean), "stderr": repr(estimate.stderr),
           "n_samples": estimate.n_samples}
    if args.quadrature:
        row["quadrature"] = repr(quadrature_moment(kind, args.beta, args.k, args.n, args.a, args.b))
    return [row]

def _density(args):
    kind = DENSITIES[args.kind]
    if kind == MARCHENKO_PASTUR:
        _require(args, "w")
        support = marchenko_pastur_support(args.w)
    else:
        _require(args, "u", "v")
        support = jacobi_limit_support(args.u, args.v)
    if not args.k is None:
        value = limiting_moment(kind, args.k, w=args.w, u=args.u, v=args.v)
        return [{"k": args.k, "value_decimal": repr(value)}]
    rows = []
    assert args.points >= 2, "the density grid needs at least two points"
    step = (support.upper - support.lower)/(args.points - 1)
    for i in range(args.points):
        x = support.lower + i*step
        rows.append({"x": repr(x), "density": repr(limiting_density(kind, x, w=args.w, u=args.u, v=args.v))})
    return rows

def _remainder(args):
    _require(args, "k", "n_list")
    target = TARGETS[args.target]
    params = {"u": args.u, "v": args.v, "w": args.w}
    params = {name: value for name, value in params.items() if value is not None}
    rows = []
    for row in remainder_scan(target, _symmetry(args), args.k, params, args.n_list, processes=args.processes):
        rows.append({"k": args.k, "n": row.n, "p": "", "value": str(row.remainder),
                     "value_decimal": _decimal(row.remainder, args.digits),
                     "scaled": mp.nstr(row.scaled, args.digits), "flags": ";".join(sorted(row.flags))})
    return rows

COMMANDS = {"moment": _moment, "coeff": _coeff, "genfun": _genfun, "selberg": _selberg,
            "verify": _verify, "sample": _sample, "density": _density, "remainder": _remainder}

def build_parser():
    "argument parser for all commands"
    parser = _Parser(prog="cavity-moments",
                     description="Exact moments of transmission eigenvalues and proper delay times")
    subparsers = parser.add_subparsers(dest="command", required=True)

    for name in COMMANDS:
        sub = subparsers.add_parser(name)
        sub.add_argument("--ensemble", choices=sorted(ENSEMBLES), default="jacobi")
        sub.add_argument("--target", choices=sorted(TARGETS), default="transmission")
        sub.add_argument("--kind", choices=sorted(DENSITIES), default="marchenko-pastur")
        sub.add_argument("--family", choices=sorted(FAMILY_PARAMETERS))
        sub.add_argument("--beta", type=int, choices=(1, 2, 4), default=2)
        sub.add_argument("--delta", type=_rational, default=Fraction(0))
        sub.add_argument("--method", choices=(CLOSED_FORM, LOOP_EQUATIONS))
        sub.add_argument("--k", type=int)
        sub.add_argument("--n", type=int)
        sub.add_argument("--p", type=int, choices=(0, 1, 2))
        sub.add_argument("--a", type=_rational, default=Fraction(0))
        sub.add_argument("--b", type=_rational, default=Fraction(0))
        sub.add_argument("--u", type=_rational)
        sub.add_argument("--v", type=_rational)
        sub.add_argument("--w", type=_rational)
        sub.add_argument("--order", type=int, default=DEFAULT_ORDER)
        sub.add_argument("--seed", type=int, default=0)
        sub.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
        sub.add_argument("--processes", type=int)
        sub.add_argument("--quadrature", action="store_true",
                         help="also integrate the moment by quadrature (sample, n <= 3)")
        sub.add_argument("--suite", choices=SUITE_NAMES, default="all")
        sub.add_argument("--kmax", type=int)
        sub.add_argument("--n-list", dest="n_list", type=_int_list)
        sub.add_argument("--points", type=int, default=11)
        sub.add_argument("--format", choices=("json", "csv"), default="json")
        sub.add_argument("--digits", type=int, default=DEFAULT_DIGITS)
        sub.add_argument("--verbose", action="store_true")

    return parser

def _inputs(args):
    "exact echo of the parsed flags"
    inputs = {}
    for name, value in sorted(vars(args).items()):
        if name in ("format", "verbose") or value is None:
            continue
        if isinstance(value, Fraction):
            value = str(value)
        inputs[name] = value
    return inputs

def render(args, rows):
    """
    Format the result rows with the reproducibility block

    :param args: Parsed arguments
    :type args: argparse.Namespace
    :param rows: Result rows
    :type rows: list of dict
    :returns: Text written to stdout
    :rtype: str
    """
    reproducibility = {"version": version, "seed": args.seed, "inputs": _inputs(args)}
    if args.format == "json":
        return json.dumps({"command": args.command, "reproducibility": reproducibility, "results": rows},
                          sort_keys=True, indent=2) + "\n"

    output = io.StringIO()
    output.write("# cavity_moments {} seed={} inputs={}\n".format(version, args.seed,
                                                                   json.dumps(reproducibility["inputs"], sort_keys=True)))
    rows = [{("value_rational" if key == "value" else key): value for key, value in row.items()} for row in rows]
    fieldnames = []
    for row in rows:
        for key in row:
            if key not in fieldnames:
                fieldnames.append(key)
    writer = csv.DictWriter(output, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return output.getvalue()

def execute(args, stdout=None, stderr=None):
    """
    Run a parsed command and write its output

    The output is only written once the command has completed, so a failing
    command produces no partial output.

    :param args: Parsed arguments
    :type args: argparse.Namespace
    :param stdout: Output stream (optional, default is ``sys.stdout``)
    :param stderr: Error stream (optional, default is ``sys.stderr``)
    :returns: Exit code
    :rtype: int
    """
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr

    logger.info("running %s", args.command)
    try:
        rows = COMMANDS[args.command](args)
    except InternalIdentityViolation as e:
        stderr.write("internal identity violation: {}\n".format(e))
        return 2
    except (CavityMomentsError, UsageError, ValueError, TypeError, AssertionError) as e:
        stderr.write("error: {}\n".format(e))
        return 1

    stdout.write(render(args, rows))
    logger.info("finished %s with %d rows", args.command, len(rows))

    if args.command == "verify" and not all(row["passed"] for row in rows):
        return 2
    return 0

def main(argv=None):
    "console script entry point"
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.INFO, stream=sys.stderr,
                            format="%(asctime)s %(name)s %(levelname)s: %(message)s")
    with warnings.catch_warnings():
        warnings.simplefilter("default")
        return execute(args)

if __name__ == "__main__":
    sys.exit(main())
