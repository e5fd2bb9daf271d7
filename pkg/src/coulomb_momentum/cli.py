"""Command-line entry point: ``coulomb-momentum {state,verify,sample}``.

Exit status: 0 when everything passes, 1 when a check fails, 2 for usage
errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import eigenbasis as eb
from .fock import sphere_weight
from .numerics import CheckReport, radial_density
from .quadrature import QuadratureSpec
from .verify import DEFAULT_TOLERANCES, SUITES, run_suite, tolerance_profile

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coulomb-momentum",
        description="Momentum-space hydrogen states and exact SO(4) operator checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", help="write output to this path instead of stdout")

    def quantum(p, required=True):
        p.add_argument("--n", type=int, required=required)
        p.add_argument("--l", type=int, required=required)
        p.add_argument("--m", type=int, default=0)

    st = sub.add_parser("state", help="print a- and b-space forms of a state")
    quantum(st)
    st.add_argument("--physical", action="store_true", help="also print the p -> n p rescaled forms")
    common(st, ["text", "json"])

    ver = sub.add_parser("verify", help="run verification suites")
    ver.add_argument("suite", help=f"one of: {', '.join(list(SUITES) + ['all'])}")
    quantum(ver, required=False)
    ver.add_argument("--max-n", type=int)
    ver.add_argument("--degree", type=int, help="numerator degree bound of the test elements")
    ver.add_argument("--denom-power", type=int, help="denominator power bound of the test elements")
    ver.add_argument("--nodes", type=int, help="Gauss-Legendre nodes per panel")
    ver.add_argument("--records", action="store_true", help="include per-element identity records")
    ver.add_argument("--profile", help="tolerance profile (default, strict, loose)")
    for key in DEFAULT_TOLERANCES:
        ver.add_argument(f"--tol-{key.replace('_', '-')}", type=float, dest=f"tol_{key}")
    ver.add_argument("--inject-failure", action="store_true", help=argparse.SUPPRESS)
    common(ver, ["text", "json"])

    sm = sub.add_parser("sample", help="emit radial momentum densities as CSV")
    quantum(sm)
    sm.add_argument("--p-max", type=float, default=5.0)
    sm.add_argument("--step", type=float, default=0.05)
    sm.add_argument("--out")
    return parser


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _state(args) -> int:
    eb.validate_quantum_numbers(args.n, args.l, args.m)
    state = eb.QuantumState.build(args.n, args.l, args.m)
    views = [("a", False), ("b", False)]
    if args.physical:
        views += [("a", True), ("b", True)]
    if args.format == "json":
        payload = {
            "schemaVersion": SCHEMA_VERSION,
            "states": [state.to_json(space, phys) for space, phys in views],
        }
        _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
        return EXIT_OK
    lines = [f"state n={state.n} l={state.l} m={state.m} k={state.k}"]
    for space, phys in views:
        field = state.physical(space) if phys else (state.a if space == "a" else state.b)
        tag = "physical" if phys else "unit-radius"
        lines.append(f"{space} ({tag}): {field.to_text()}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _verify_options(args) -> dict:
    opts: dict = {"keep_records": args.records}
    tolerances = tolerance_profile(args.profile)
    for key in DEFAULT_TOLERANCES:
        value = getattr(args, f"tol_{key}")
        if value is not None:
            if value <= 0:
                raise UsageError(f"--tol-{key.replace('_', '-')} must be positive")
            tolerances[key] = value
    opts["tolerances"] = tolerances
    if args.max_n is not None:
        if args.max_n < 1:
            raise UsageError("--max-n must be >= 1")
        opts["max_n"] = args.max_n
    if args.degree is not None:
        if args.degree < 0:
            raise UsageError("--degree must be >= 0")
        opts["degree"] = args.degree
    if args.denom_power is not None:
        if args.denom_power < 0:
            raise UsageError("--denom-power must be >= 0")
        opts["denom_power"] = args.denom_power
    if args.nodes is not None:
        opts["spec"] = QuadratureSpec(nodes=args.nodes)
    if args.n is not None or args.l is not None:
        if args.n is None or args.l is None:
            raise UsageError("--n and --l must be given together")
        eb.validate_quantum_numbers(args.n, args.l, args.m)
        opts["states"] = ((args.n, args.l),)
    return opts


def _verify(args) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(list(SUITES) + ['all'])}")
    reports = run_suite(args.suite, **_verify_options(args))
    if args.inject_failure:
        reports.append(CheckReport("injected failure", 1.0, 0.0, {"hook": True}))
    passed = all(r.passed for r in reports)
    if args.format == "json":
        payload = {
            "schemaVersion": SCHEMA_VERSION,
            "suite": args.suite,
            "passed": passed,
            "reports": [r.to_json() for r in reports],
        }
        _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
    else:
        lines = [
            f"{'PASS' if r.passed else 'FAIL'}  {r.name}  residual={r.residual:.3e}  tol={r.tolerance:.1e}"
            for r in reports
        ]
        lines.append(f"{sum(r.passed for r in reports)}/{len(reports)} checks passed")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if passed else EXIT_FAIL


def _sample(args) -> int:
    eb.validate_quantum_numbers(args.n, args.l, args.m)
    if not (args.step > 0 and args.p_max > 0) or args.step > args.p_max:
        raise UsageError("need 0 < step <= p-max")
    state = eb.QuantumState.build(args.n, args.l, args.m)
    density = radial_density(state.physical("a"))
    count = int(round(args.p_max / args.step)) + 1
    grid = np.arange(count) * args.step
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["p", "density", "sphere_weight"])
    for p, d, w in zip(grid, density(grid), sphere_weight(np.stack([grid, 0 * grid, 0 * grid], -1))):
        writer.writerow([f"{p:.10g}", f"{d:.17g}", f"{w:.17g}"])
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {"state": _state, "verify": _verify, "sample": _sample}
    try:
        return handlers[args.command](args)
    except (UsageError, ValueError, TypeError) as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
