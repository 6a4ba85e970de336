"""Command-line front end.

Subcommands: mu, alpha, dim, construct, verify, enumerate,
oracle-minmatrix, oracle-weyl, nilbound, prune.  Every numeric output is
an exact integer; machine-readable output via --json.

Exit codes: 0 success, 1 parse or usage error, 2 unsupported request
(exceptional construction, unavailable alpha, missing host table),
3 verification or oracle-mismatch failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import classify, matrixrep, repmodel, weyl
from .expr import ExprError, parse_expr
from .invariants import (
    SimpleType,
    alpha,
    dim_of,
    dim_simple,
    mu,
    p_bound,
)

__all__ = ["main", "parse_expr"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNSUPPORTED = 2
EXIT_MISMATCH = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage errors; the interface reserves
    # 2 for unsupported requests and uses 1 for usage problems.
    def error(self, message: str):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lierep", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    for name, text in (
        ("mu", "minimal faithful representation degree"),
        ("alpha", "maximal abelian subalgebra dimension"),
        ("dim", "dimension of the algebra"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("expr")
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("construct", help="build the minimal faithful representation")
    p.add_argument("expr")
    p.add_argument("--out", help="write the representation JSON here instead of stdout")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="verify a representation file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("enumerate", help="reductive subalgebras of gl_n up to isomorphism")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser(
        "oracle-minmatrix",
        help="exhaustive dimension-matrix minimizer vs the closed formula",
    )
    p.add_argument("expr")
    p.add_argument("--max-f", type=int, required=True, dest="max_f")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("oracle-weyl", help="minimal module dimension via the Weyl formula")
    p.add_argument("type")
    p.add_argument("--upto", type=int, default=None, help="list dimensions up to this bound")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("nilbound", help="the nilpotent upper bound p(n, k)")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("prune", help="alpha-pruning route for an embedding question")
    p.add_argument("expr")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--tables", help="host table JSON file or directory")
    p.add_argument("--json", action="store_true")

    return parser


def _emit(payload: dict, text: str, as_json: bool) -> None:
    print(json.dumps(payload, indent=2) if as_json else text)


def _cmd_invariant(args) -> int:
    g = parse_expr(args.expr)
    if args.command == "mu":
        value = mu(g)
    elif args.command == "dim":
        value = dim_of(g)
    else:
        a = alpha(g)
        if a is None:
            print(f"alpha({g}) is unavailable (no table entry)", file=sys.stderr)
            return EXIT_UNSUPPORTED
        value = a
    _emit({"algebra": str(g), args.command: value}, str(value), args.json)
    return EXIT_OK


def _cmd_construct(args) -> int:
    g = parse_expr(args.expr)
    rep = matrixrep.reductive_min_rep(g)
    payload = matrixrep.rep_to_json_dict(rep)
    text = json.dumps(payload, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
        print(f"wrote degree-{rep.degree} representation of {g} to {args.out}")
    else:
        print(text)
    return EXIT_OK


def _cmd_verify(args) -> int:
    with open(args.file) as fh:
        data = json.load(fh)
    rep = matrixrep.rep_from_json_dict(data)
    try:
        sc = matrixrep.structure_constants_of(rep)
    except ValueError as exc:
        # dependent basis or bracket escape: the file does not describe a
        # faithful representation of any algebra on this basis
        if args.json:
            print(json.dumps({"ok": False, "error": str(exc)}, indent=2))
        else:
            print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    report = matrixrep.verify_rep(rep, sc)
    payload = {
        "ok": report.ok,
        "degree": report.degree,
        "algebra": str(rep.algebra),
        "kernel_dim": report.kernel_dim,
        "bracket_failures": [list(pair) for pair in report.bracket_failures],
    }
    _emit(payload, report.summary(), args.json)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def _cmd_enumerate(args) -> int:
    algebras = classify.enumerate_gln(args.n)
    if args.json:
        sys.stdout.write(classify.enumeration_to_json(algebras))
    else:
        for g in algebras:
            print(g)
    return EXIT_OK


def _cmd_oracle_minmatrix(args) -> int:
    g = parse_expr(args.expr)
    if g.center_dim or not g.simples:
        raise _UsageError("oracle-minmatrix needs a nonzero semisimple expression")
    sets = []
    for s in g.simples:
        dims = weyl.irrep_dims_upto(weyl.root_data(s), args.max_f)
        if not dims:
            raise _UsageError(f"--max-f {args.max_f} is below mu({s}); no dimensions available")
        sets.append(dims)
    expected = mu(g)
    try:
        found = repmodel.min_faithful_value(sets, value_bound=args.max_f)
    except repmodel.SearchExhausted:
        found = None
    agree = (found == expected) if found is not None else (expected > args.max_f)
    if found is not None:
        text = f"oracle minimum {found}, formula {expected}: {'agree' if agree else 'MISMATCH'}"
    else:
        text = (
            f"no faithful matrix with f <= {args.max_f}; formula gives {expected}: "
            f"{'consistent' if agree else 'MISMATCH'}"
        )
    _emit(
        {"algebra": str(g), "oracle": found, "formula": expected, "agree": agree},
        text,
        args.json,
    )
    return EXIT_OK if agree else EXIT_MISMATCH


def _cmd_oracle_weyl(args) -> int:
    try:
        t = SimpleType.from_name(args.type)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    rd = weyl.root_data(t)
    minimal = weyl.min_nontrivial_dim(rd)
    # default listing bound: the adjoint dimension, so at least the
    # natural and adjoint modules show up
    bound = args.upto if args.upto is not None else dim_simple(t)
    dims = weyl.irrep_dims_upto(rd, bound)
    payload = {"type": t.name, "min_nontrivial_dim": minimal, "upto": bound, "dims": dims}
    text = f"min nontrivial dim of {t}: {minimal}; dims <= {bound}: {dims}"
    _emit(payload, text, args.json)
    return EXIT_OK


def _cmd_nilbound(args) -> int:
    value = p_bound(args.n, args.k)
    _emit({"n": args.n, "k": args.k, "p": value}, str(value), args.json)
    return EXIT_OK


def _cmd_prune(args) -> int:
    g = parse_expr(args.expr)
    tables = classify.tables_from_env()
    if args.tables:
        tables.update(classify.load_host_tables(args.tables))
    verdict = classify.embeddability_check(g, args.degree, tables)
    if args.json:
        payload = {
            "algebra": str(g),
            "degree": args.degree,
            "outcome": verdict.outcome.value,
            "trace": [
                {
                    "candidate": str(r.candidate),
                    "host": r.host,
                    "reason": r.reason,
                    "excluded": r.excluded,
                }
                for r in verdict.trace
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"{g} in gl_{args.degree}: {verdict.outcome.value}")
        for r in verdict.trace:
            mark = "excluded" if r.excluded else "kept"
            print(f"  {r.candidate} vs {r.host}: {mark} ({r.reason})")
    return EXIT_OK


_HANDLERS = {
    "mu": _cmd_invariant,
    "alpha": _cmd_invariant,
    "dim": _cmd_invariant,
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "enumerate": _cmd_enumerate,
    "oracle-minmatrix": _cmd_oracle_minmatrix,
    "oracle-weyl": _cmd_oracle_weyl,
    "nilbound": _cmd_nilbound,
    "prune": _cmd_prune,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ExprError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except matrixrep.UnsupportedConstruction as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (classify.MissingTable, classify.AlphaUnavailable) as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED


if __name__ == "__main__":
    sys.exit(main())
