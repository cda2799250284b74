"""
Command-line front end.

Exit status: 0 success (Equal for triple-eq), 1 Distinct or a failed golden
check, 2 Undecided, 64 unreadable input, 70 an internal consistency check failed.
FILE arguments may be paths or '@name' for a bundled fixture (e.g. @xjx.triple).
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import documents as docs
from .group_ring import parse_ring
from .heisenberg import ContextError
from .invariants import METRICS, affine_norm_stat, gcd_profile, mu_bar, profile_report, width
from .milnor import format_word
from .orbit import Distinct, Equal, orbit_eq, verdict_report
from .parsing import ParseError
from .theta import StackError, closure_sigma
from .triples import LABELS, Triple, brunnian_certificate, kirk_projection
from .welded import NotPureError, braid_action, braid_permutation, letter_name, longitudes, parse_braid

EX_OK, EX_DISTINCT, EX_UNDECIDED = 0, 1, 2
EX_DATAERR, EX_SOFTWARE = 64, 70


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(args, obj, text: str) -> None:
    sys.stdout.write(docs.dumps(obj) if args.json else text.rstrip("\n") + "\n")


def _triple_text(v: Triple) -> str:
    return "\n".join(f"{label}: {r}" for label, r in zip(LABELS, v.parts))


# subcommands

def cmd_normalize(args) -> int:
    r = parse_ring(args.expr, args.ctx)
    _emit(args, {"ctx": r.ctx.label, "terms": [list(t) for t in r.records()], "text": str(r)}, str(r))
    return EX_OK


def cmd_triple_eq(args) -> int:
    v, w = docs.load_triple(args.a), docs.load_triple(args.b)
    verdict = orbit_eq(v, w, radius=args.radius)
    report = verdict_report(verdict)
    if isinstance(verdict, Equal):
        text = f"Equal (witness {verdict.witness.as_tuple()})"
        code = EX_OK
    elif isinstance(verdict, Distinct):
        where = f" on component {verdict.component}" if verdict.component else ""
        text = f"Distinct by {verdict.separator}{where}: {verdict.detail}"
        code = EX_DISTINCT
    else:
        text = f"Undecided within radius {verdict.radius}"
        code = EX_UNDECIDED
    _emit(args, report, text)
    return code


def cmd_invariant(args) -> int:
    v = docs.load_triple(args.file)
    if args.name == "gcd":
        rep = profile_report(gcd_profile(v))
        text = "\n".join(f"{k}: {val}" for k, val in rep.items())
        _emit(args, rep, text)
    elif args.name == "mu":
        rep = mu_bar(v).report()
        _emit(args, rep, "\n".join(f"{k}: {val}" for k, val in rep.items()))
    elif args.name == "norm-stat":
        stat = affine_norm_stat(mu_bar(v))
        _emit(args, {"norm_stat": str(stat)}, str(stat))
    else:
        res = width(v, args.metric, args.radius)
        rep = {"metric": args.metric, "value": res.value, "witness": list(res.witness.as_tuple()), "exhaustive": res.exhaustive}
        note = "" if res.exhaustive else " (search clipped to the radius)"
        _emit(args, rep, f"{args.metric} width {res.value} at shift {res.witness.as_tuple()}{note}")
    return EX_OK


def cmd_kirk_proj(args) -> int:
    v = docs.load_triple(args.file)
    p, q = kirk_projection(v, args.drop)
    _emit(args, {"first": str(p), "second": str(q)}, f"({p}, {q})")
    return EX_OK


def cmd_brunnian(args) -> int:
    ok = brunnian_certificate(docs.load_triple(args.file))
    _emit(args, {"brunnian": ok}, "true" if ok else "false")
    return EX_OK


def cmd_braid(args) -> int:
    b = parse_braid(args.word)
    if args.action == "parse":
        letters = [letter_name(a) for a in b.letters]
        _emit(args, {"word": str(b), "letters": letters, "reduced": str(b.normalized())}, str(b.normalized()) or "(empty)")
    elif args.action == "perm":
        perm = braid_permutation(b)
        _emit(args, {"permutation": list(perm)}, " ".join(map(str, perm)))
    elif args.action == "longitudes":
        d = longitudes(b)
        rep = {"longitudes": {lab: format_word(w) for lab, w in zip(LABELS, d.longitudes)}, "exponents": d.exponents}
        lines = [f"w_{lab} = {format_word(w)}" for lab, w in zip(LABELS, d.longitudes)]
        lines.append(" ".join(f"{k}={val}" for k, val in d.exponents.items()))
        _emit(args, rep, "\n".join(lines))
    else:
        images = braid_action(b)
        rep = {lab: format_word(w) for lab, w in zip(LABELS, images)}
        _emit(args, rep, "\n".join(f"{lab} -> {w}" for lab, w in rep.items()))
    return EX_OK


def cmd_stack_eval(args) -> int:
    st = docs.load_stack(args.file)
    v = closure_sigma(st, check=args.check_both_routes)
    _emit(args, docs.triple_to_doc(v), _triple_text(v))
    return EX_OK


def cmd_examples_run(args) -> int:
    from .fixtures import golden_checks

    results = []
    for name, check in golden_checks():
        try:
            ok = bool(check())
        except Exception as exc:  # a crashing check is a failure, reported with its reason
            ok, name = False, f"{name} ({type(exc).__name__}: {exc})"
        results.append({"name": name, "pass": ok})
    _emit(args, results, "\n".join(f"{'PASS' if r['pass'] else 'FAIL'} {r['name']}" for r in results))
    return EX_OK if all(r["pass"] for r in results) else EX_DISTINCT


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="canonical JSON output")

    p = _Parser(prog="linkmap", description="Link-homotopy invariants of three-component link maps.", parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("normalize", parents=[common], help="normal form of a group-ring expression")
    s.add_argument("expr")
    s.add_argument("--ctx", choices=["X", "Y", "Z"], help="which quotient (inferred when omitted)")
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("triple-eq", parents=[common], help="decide equality up to basing shifts")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--radius", type=int)
    s.set_defaults(func=cmd_triple_eq)

    s = sub.add_parser("invariant", parents=[common], help="derived invariants of a triple")
    s.add_argument("name", choices=["gcd", "mu", "width", "norm-stat"])
    s.add_argument("file")
    s.add_argument("--metric", choices=METRICS, default="L1")
    s.add_argument("--radius", type=int)
    s.set_defaults(func=cmd_invariant)

    s = sub.add_parser("kirk-proj", parents=[common], help="two-component projection")
    s.add_argument("file")
    s.add_argument("--drop", required=True, help="component to drop: x, y, z or 1, 2, 3")
    s.set_defaults(func=cmd_kirk_proj)

    s = sub.add_parser("brunnian", parents=[common], help="whether every projection vanishes")
    s.add_argument("file")
    s.set_defaults(func=cmd_brunnian)

    s = sub.add_parser("braid", parents=[common], help="welded braid words")
    s.add_argument("action", choices=["parse", "perm", "longitudes", "auto"])
    s.add_argument("word")
    s.set_defaults(func=cmd_braid)

    s = sub.add_parser("stack", parents=[common], help="JK stacks")
    s.add_argument("action", choices=["eval"])
    s.add_argument("file")
    s.add_argument("--check-both-routes", action="store_true", help="also evaluate the explicit sum and compare")
    s.set_defaults(func=cmd_stack_eval)

    s = sub.add_parser("examples", parents=[common], help="bundled worked examples")
    s.add_argument("action", choices=["run"])
    s.set_defaults(func=cmd_examples_run)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(sys.argv[1:] if argv is None else argv))
        if not hasattr(args, "json"):
            args.json = False
        return args.func(args)
    except UsageError as exc:
        print(f"linkmap: {exc}", file=sys.stderr)
        return EX_DATAERR
    except AssertionError as exc:
        print(f"linkmap: internal check failed: {exc}", file=sys.stderr)
        return EX_SOFTWARE
    except (ParseError, NotPureError, StackError, ContextError, ValueError) as exc:
        print(f"linkmap: {exc}", file=sys.stderr)
        return EX_DATAERR


if __name__ == "__main__":
    sys.exit(main())
