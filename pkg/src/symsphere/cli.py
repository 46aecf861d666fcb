"""Command-line interface: ``symsphere <subcommand> ...``.

Exit codes: 0 success (or "yes"), 1 "no" for distance checks, 2 bad usage or
malformed input, 3 rank-deficient generator matrix.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import formats
from .mindist import METHODS, RankDeficientError, search_min_distance, weight_at_least
from .moebius import BudgetExceededError, expand, moebius
from .spheres import build_phi, build_rho, emit_table, format_runs, format_table
from .symfunc import SymmetricPoly, restrict

EXIT_OK, EXIT_NO, EXIT_PARSE, EXIT_RANK = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_PARSE) -> None:
        super().__init__(message)
        self.code = code


def _dumps(obj: object) -> str:
    return json.dumps(obj, sort_keys=True)


def sigma_text(p: SymmetricPoly) -> str:
    terms = ["1"] if p.constant else []
    for run in format_runs(p.window()).split(","):
        if run:
            terms.append(f"sigma[{run}]")
    return " + ".join(terms) if terms else "0"


def _family(args: argparse.Namespace) -> str:
    name = args.command
    p = build_phi(args.t) if name == "phi" else build_rho(args.t)
    if args.format == "anf":
        if args.vars is None:
            raise CliError("--format anf requires --vars")
        return formats.anf_to_text(expand(restrict(p, args.vars), args.vars))
    if args.format == "json":
        if args.vars is None:
            obj = {"t": args.t, "tau": p.period, "constant": p.constant, "indices": p.window()}
        else:
            q = restrict(p, args.vars)
            obj = {"t": args.t, "n": args.vars, "constant": q.constant, "indices": q.window()}
        return _dumps(obj)
    if args.vars is None:
        return f"{name}[{args.t}]: {sigma_text(p)} (period {p.period})"
    return f"{name}[{args.t}] in {args.vars} variables: {sigma_text(restrict(p, args.vars))}"


def _table(args: argparse.Namespace) -> str:
    rows = emit_table(args.max)
    if args.format == "json":
        return "\n".join(
            _dumps(
                {
                    "t": r.t,
                    "phi": {"tau": r.tau_phi, "indices": list(r.phi)},
                    "rho": {"tau": r.tau_rho, "indices": list(r.rho)},
                }
            )
            for r in rows
        )
    return format_table(rows).rstrip("\n")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from exc


def _moebius(args: argparse.Namespace) -> str | None:
    n, bits = formats.read_bits(_read(args.input))
    out = formats.write_bits(n, moebius(bits))
    if args.output:
        Path(args.output).write_text(out)
        return None
    return out.rstrip("\n")


def _expand(args: argparse.Namespace) -> str:
    if args.phi is not None:
        p = restrict(build_phi(args.phi), args.vars)
    elif args.rho is not None:
        p = restrict(build_rho(args.rho), args.vars)
    else:
        degrees = [int(d) for d in args.degrees.split(",") if d.strip()]
        p = SymmetricPoly.finite(degrees)
    if args.constant:
        p = p + 1
    f = expand(restrict(p, args.vars), args.vars)
    if args.format == "anf":
        return formats.anf_to_text(f)
    dense = f.to_dense()
    bits = dense.bits if args.format == "coeffs" else dense.truth_table().bits
    return formats.write_bits(args.vars, bits).rstrip("\n")


def _mindist(args: argparse.Namespace) -> tuple[str, int]:
    g = formats.read_generator(_read(args.gen))
    if args.check is not None:
        holds = weight_at_least(g, args.check, args.method)
        code = EXIT_OK if holds else EXIT_NO
        if args.format == "json":
            return _dumps({"t": args.check, "holds": holds, "checks_performed": 1}), code
        return f"d >= {args.check}: {'yes' if holds else 'no'}", code
    result = search_min_distance(g, args.method)
    if args.format == "json":
        return _dumps({"d": result.d, "checks_performed": result.checks_performed}), EXIT_OK
    return f"d = {result.d}", EXIT_OK


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def _pos(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symsphere",
        description="Sphere and shell polynomials over GF(2), Moebius transforms, code distance checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, what in (("phi", "weight >= t indicator"), ("rho", "weight == t indicator")):
        p = sub.add_parser(name, help=f"sigma-basis form of the {what}")
        p.add_argument("t", type=_nonneg)
        p.add_argument("--vars", type=_nonneg, help="restrict to this many variables")
        p.add_argument("--format", choices=("sigma", "anf", "json"), default="sigma")

    p = sub.add_parser("table", help="windows and periods of phi_t and rho_t for t = 1..max")
    p.add_argument("--max", type=_pos, default=63)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("moebius", help="binary Moebius transform of a bit-vector file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", dest="output")

    p = sub.add_parser("expand", help="explicit ANF of a symmetric polynomial")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--phi", type=_nonneg)
    which.add_argument("--rho", type=_nonneg)
    which.add_argument("--degrees", help="comma-separated sigma degrees")
    p.add_argument("--constant", action="store_true", help="add the constant 1")
    p.add_argument("--vars", type=_nonneg, required=True)
    p.add_argument("--format", choices=("anf", "truth", "coeffs"), default="anf")

    p = sub.add_parser("mindist", help="check or search the minimum distance of a linear code")
    p.add_argument("--gen", required=True, help="generator-matrix file")
    p.add_argument("--method", choices=METHODS, default="eval")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--check", type=_pos, metavar="T")
    mode.add_argument("--search", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def run(argv: Sequence[str] | None = None) -> tuple[str | None, int]:
    args = build_parser().parse_args(argv)
    code = EXIT_OK
    if args.command in ("phi", "rho"):
        out: str | None = _family(args)
    elif args.command == "table":
        out = _table(args)
    elif args.command == "moebius":
        out = _moebius(args)
    elif args.command == "expand":
        out = _expand(args)
    else:
        out, code = _mindist(args)
    return out, code


def main(argv: Sequence[str] | None = None) -> int:
    try:
        out, code = run(argv)
    except RankDeficientError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANK
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (BudgetExceededError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if out is not None:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
