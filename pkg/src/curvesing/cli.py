"""Command line entry point ``curvesing``.

Exit codes: 0 on success (flags included), 1 on internal errors, 2 on
usage errors such as malformed polynomials or pairs that are not coprime.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from .bfunction import ENGINES, global_bfunction, local_bfunction, modular_bfunction
from .implicitize import implicitize_branch
from .local_algebra import milnor_number, tjurina_number
from .poly import ContractError, MultiPoly, ParseError
from .report import BS_MODES, FORMATS, build_report, render


class UsageError(Exception):
    pass


def _poly_arg(text: str) -> MultiPoly:
    if os.path.isfile(text):
        with open(text) as fh:
            text = fh.read().strip()
    try:
        f = MultiPoly.parse(text)
    except ParseError as exc:
        raise UsageError(f"cannot parse polynomial: {exc}") from None
    if f.vars == ("y",):
        f = f.rename(("x", "y"))
    return f


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="curvesing", description="Invariants of plane curve branches.")
    sub = ap.add_subparsers(dest="command", required=True)

    rep = sub.add_parser("report", help="table of f_r, tau, mu and b-functions for a pair")
    rep.add_argument("--p", type=int, required=True)
    rep.add_argument("--q", type=int, required=True)
    rep.add_argument("--r", type=int, action="append", help="restrict to f_0 and these gaps")
    rep.add_argument("--bs", choices=BS_MODES, default="skip")
    rep.add_argument("--budget", type=float, default=None, help="seconds per b-function row")
    rep.add_argument("--format", choices=FORMATS, default="text")
    rep.add_argument("--jobs", type=int, default=1)
    rep.add_argument("--engine", choices=ENGINES, default="auto", help="b-function algorithm")

    imp = sub.add_parser("implicitize", help="implicit equation of x = t^p, y = t^q + t^r")
    imp.add_argument("--p", type=int, required=True)
    imp.add_argument("--q", type=int, required=True)
    imp.add_argument("--r", type=int, default=None)

    bs = sub.add_parser("bs", help="Bernstein-Sato polynomial of a polynomial")
    bs.add_argument("--poly", required=True, help="literal polynomial or a file containing one")
    bs.add_argument("--local", action="store_true", help="local b-function at the origin")
    bs.add_argument("--engine", choices=ENGINES, default="auto", help="b-function algorithm")

    tj = sub.add_parser("tjurina", help="Tjurina and Milnor numbers at the origin")
    tj.add_argument("--poly", required=True)
    return ap


def _run(args) -> str:
    if args.command == "report":
        if args.jobs < 1:
            raise UsageError("--jobs must be positive")
        if args.budget is not None and args.budget <= 0:
            raise UsageError("--budget must be positive")
        report = build_report((args.p, args.q), args.bs, args.budget, args.jobs, args.r, args.engine)
        return render(report, args.format).decode()
    if args.command == "implicitize":
        return str(implicitize_branch((args.p, args.q), args.r).f) + "\n"
    if args.command == "bs":
        f = _poly_arg(args.poly)
        if args.local:
            b = local_bfunction(f, args.engine)
        elif args.engine == "brieskorn":
            raise UsageError("--engine brieskorn needs --local")
        else:
            b = modular_bfunction(f, local=False) if args.engine == "modular" else global_bfunction(f)
        return b.format() + "\n"
    if args.command == "tjurina":
        f = _poly_arg(args.poly)
        return f"tau = {tjurina_number(f)}\nmu = {milnor_number(f)}\n"
    raise UsageError(f"unknown command {args.command!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = _parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = _run(args)
    except (UsageError, ContractError, ParseError, ValueError) as exc:
        print(f"curvesing: error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:
        print(f"curvesing: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(out)
    sys.stdout.flush()
    return 0


if __name__ == "__main__":
    sys.exit(main())
