"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import ConvergenceError, InconclusiveProbeError, KleinThetaError, VerificationError
from .klein import (RealCurveModel, TopologicalType, enumerate_types, picard_involution,
                    standard_model)
from .real_sw import component_group, sw_table
from .tables import dumps, provenance, table_to_csv, table_to_dict, validate_table_dict
from .theta import QuadraticForm, arf, enumerate_theta, is_real_theta
from .verify import SUITE_NAMES, Settings, run_suite


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="kleintheta", description="Real theta data of Klein surfaces.")
    p.add_argument("--version", action="version", version=f"kleintheta {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("types", help="list valid topological types")
    s.add_argument("--g-max", type=int, required=True)

    s = sub.add_parser("model", help="standard model of a topological type")
    s.add_argument("--type", dest="type_", required=True, metavar="g,n,a")
    s.add_argument("--search-bound", type=int, default=2)

    s = sub.add_parser("theta", help="enumerate theta forms")
    s.add_argument("--g", type=int, required=True)
    s.add_argument("--real", action="store_true", help="only forms real for --type")
    s.add_argument("--type", dest="type_", metavar="g,n,a")

    s = sub.add_parser("sw", help="Stiefel-Whitney table of a real theta form")
    s.add_argument("--type", dest="type_", required=True, metavar="g,n,a")
    s.add_argument("--q", required=True, metavar="bits", help="2g comma-separated bits")
    s.add_argument("--format", choices=("json", "csv"), default="json")

    s = sub.add_parser("verify", help="run verification suites")
    s.add_argument("--suite", choices=SUITE_NAMES + ("all",), default="all")
    s.add_argument("--tol", type=float)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--json", action="store_true", help="machine-readable report")
    return p


def _model(type_text: str, search_bound: int = 2) -> RealCurveModel:
    return standard_model(TopologicalType.parse(type_text), search_bound)


def _parse_bits(text: str) -> QuadraticForm:
    try:
        bits = [int(b) for b in text.split(",")] if text.strip() else []
        return QuadraticForm.from_bits(bits)
    except ValueError as exc:
        raise UsageError(f"bad --q {text!r}: {exc}") from None


def cmd_types(args, out) -> int:
    if args.g_max < 0:
        raise UsageError("--g-max must be >= 0")
    types = [{"g": t.g, "n": t.n, "a": t.a, "type": str(t)} for t in enumerate_types(args.g_max)]
    out.write(dumps({"types": types, "count": len(types),
                     "provenance": provenance(g_max=args.g_max)}) + "\n")
    return 0


def cmd_model(args, out) -> int:
    m = _model(args.type_, args.search_bound)
    payload = {
        "type": str(m.type),
        "iotaStar": [list(r) for r in m.iota_star],
        "H": [list(r) for r in m.h_block],
        "comessatti": m.type.comessatti,
        "circleClasses": [list(c) for c in m.circle_classes],
        "provenance": provenance(type=str(m.type), search_bound=args.search_bound),
    }
    if m.type.n:
        payload["components"] = [c.label() for c in component_group(picard_involution(m)).components]
    out.write(dumps(payload) + "\n")
    return 0


def cmd_theta(args, out) -> int:
    if args.g < 0:
        raise UsageError("--g must be >= 0")
    if args.real != bool(args.type_):
        raise UsageError("--real and --type must be given together")
    forms = enumerate_theta(args.g)
    if args.real:
        m = _model(args.type_)
        if m.genus != args.g:
            raise UsageError(f"--g {args.g} does not match the genus of type ({m.type})")
        forms = (q for q in forms if is_real_theta(q, m))
    rows = [{"q": q.bits(), "arf": arf(q)} for q in forms]
    out.write(dumps({"forms": rows, "count": len(rows),
                     "provenance": provenance(g=args.g, type=args.type_)}) + "\n")
    return 0


def cmd_sw(args, out) -> int:
    m = _model(args.type_)
    q = _parse_bits(args.q)
    if q.genus != m.genus:
        raise UsageError(f"--q has {len(q.values)} bits; type ({m.type}) needs {2 * m.genus}")
    table = sw_table(m, q)
    payload = table_to_dict(table, type=str(m.type), q=q.bits())
    validate_table_dict(json.loads(dumps(payload)))
    out.write(dumps(payload) + "\n" if args.format == "json" else table_to_csv(table))
    return 0


def cmd_verify(args, out) -> int:
    settings = Settings(seed=args.seed, tol=args.tol)
    if args.json:
        results = run_suite(args.suite, settings)
    else:
        results = run_suite(args.suite, settings, on_result=lambda r: out.write(r.line() + "\n"))
    failed = [r for r in results if not r.passed]
    if args.json:
        out.write(dumps({"suite": args.suite, "passed": not failed,
                         "checks": [r.as_dict() for r in results],
                         "provenance": provenance(suite=args.suite, seed=args.seed, tol=args.tol)}) + "\n")
    else:
        out.write(f"{len(results) - len(failed)}/{len(results)} checks passed\n")
    for r in failed:
        sys.stderr.write(f"kleintheta: check {r.suite}/{r.name} failed: {r.detail}\n")
    return 1 if failed else 0


COMMANDS = {"types": cmd_types, "model": cmd_model, "theta": cmd_theta,
            "sw": cmd_sw, "verify": cmd_verify}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        sys.stderr.write(f"kleintheta: usage error: {exc}\n")
        return 2
    except (VerificationError, ConvergenceError, InconclusiveProbeError) as exc:
        sys.stderr.write(f"kleintheta: verification failed ({type(exc).__name__}): {exc}\n")
        return 1
    except (KleinThetaError, ValueError) as exc:
        sys.stderr.write(f"kleintheta: {exc}\n")
        return 2
    except RuntimeError as exc:
        sys.stderr.write(f"kleintheta: {type(exc).__name__}: {exc}\n")
        return 1


run = main
