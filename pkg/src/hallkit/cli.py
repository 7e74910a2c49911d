"""Command-line surface.

Deterministic text or JSON output for every subcommand; exit code 0 on
success, 1 on a domain error (with a machine-readable diagnostic on
stderr), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import embeddings as emb
from . import oracle, verify
from .errors import HallkitError
from .hall import hall_polynomial
from .partitions import fmt, parse
from .s2cat import object_of_tableau, parse_object, tableau_of_object
from .tableaux import KleinTableau, ascii_diagram, enumerate_klein, enumerate_lr


def _parse_tableau(text: str) -> KleinTableau:
    text = text.strip()
    if text.startswith("{"):
        return KleinTableau.from_json(json.loads(text))
    return KleinTableau.from_text(text)


def _parse_gens(text: str) -> list[list[int]]:
    text = text.strip()
    if not text:
        return []
    return [[int(x) for x in chunk.split(",")] for chunk in text.split(";")]


def _emit(payload: dict, text: str, fmt_kind: str):
    if fmt_kind == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _add_type_flags(sub, gamma_required=True):
    sub.add_argument("--alpha", default="", help="subgroup type, e.g. 3,2,1")
    sub.add_argument("--beta", required=True, help="ambient type, e.g. 4,3,2")
    sub.add_argument("--gamma", default="", help="quotient type, e.g. 2,1")


def _add_format_flag(sub):
    sub.add_argument("--format", choices=("text", "json"), default="text")


def cmd_hall(args) -> int:
    alpha, beta, gamma = parse(args.alpha), parse(args.beta), parse(args.gamma)
    bd = hall_polynomial(alpha, beta, gamma)
    payload = {
        "alpha": list(alpha),
        "beta": list(beta),
        "gamma": list(gamma),
        "polynomial": bd.total.to_json(),
        "text": bd.total.to_text(),
    }
    lines = [bd.total.to_text()]
    if args.per_tableau:
        payload["per_tableau"] = [
            {"tableau": tab.to_json(), "tableau_text": tab.to_text(), "multiplicity": poly.to_text()}
            for tab, poly in bd.per_tableau
        ]
        for tab, poly in bd.per_tableau:
            lines.append(f"  {tab.to_text()}  ->  {poly.to_text()}")
    _emit(payload, "\n".join(lines), args.format)
    return 0


def cmd_tableaux(args) -> int:
    alpha, beta, gamma = parse(args.alpha), parse(args.beta), parse(args.gamma)
    if args.kind == "lr":
        tabs = [KleinTableau(t.gammas) for t in enumerate_lr(alpha, beta, gamma)]
    else:
        tabs = list(enumerate_klein(alpha, beta, gamma))
    if args.count:
        _emit({"count": len(tabs)}, str(len(tabs)), args.format)
        return 0
    payload = {"tableaux": [t.to_json() for t in tabs]}
    blocks = []
    for t in tabs:
        blocks.append(t.to_text())
        blocks.append(ascii_diagram(t))
    _emit(payload, "\n".join(blocks) if blocks else "(none)", args.format)
    return 0


def cmd_decompose(args) -> int:
    if args.tableau is not None:
        tab = _parse_tableau(args.tableau)
        obj = object_of_tableau(tab)
        payload = {"object": obj.to_json(), "text": obj.to_text()}
        _emit(payload, obj.to_text(), args.format)
    else:
        obj = parse_object(args.object)
        tab = tableau_of_object(obj)
        payload = {"tableau": tab.to_json(), "text": tab.to_text()}
        _emit(payload, f"{tab.to_text()}\n{ascii_diagram(tab)}", args.format)
    return 0


def cmd_embed(args) -> int:
    E = emb.Embedding.from_coords(args.prime, parse(args.beta), _parse_gens(args.gens), args.cap)
    if args.what == "tableau":
        tab = emb.klein_tableau(E)
        payload = {"tableau": tab.to_json(), "text": tab.to_text()}
        _emit(payload, f"{tab.to_text()}\n{ascii_diagram(tab)}", args.format)
    elif args.what == "lr":
        tab = emb.lr_tableau(E)
        payload = {"gammas": [list(g) for g in tab.gammas]}
        _emit(payload, "/".join(fmt(g) or "-" for g in tab.gammas), args.format)
    else:  # type
        amb = E.ambient
        alpha = emb.module_type(amb, E.subgroup)
        gamma = emb.quotient_type(amb, E.subgroup)
        payload = {"alpha": list(alpha), "beta": list(E.beta), "gamma": list(gamma)}
        _emit(payload, f"({fmt(alpha)}) <= ({fmt(E.beta)}) quotient ({fmt(gamma)})", args.format)
    return 0


def cmd_oracle(args) -> int:
    alpha, beta, gamma = parse(args.alpha), parse(args.beta), parse(args.gamma)
    count = oracle.hall_count(args.prime, alpha, beta, gamma, args.subgroup_cap)
    report = oracle.subgroup_report(args.prime, beta, args.by_tableau, args.subgroup_cap)
    payload = {
        "count": count,
        "description": report.description,
        "elapsed": round(report.elapsed, 3),
    }
    lines = [str(count)]
    if args.by_tableau:
        by_tab = oracle.hall_count_by_tableau(args.prime, beta, args.subgroup_cap)
        wanted = enumerate_klein(alpha, beta, gamma)
        payload["by_tableau"] = [
            {"tableau": tab.to_json(), "tableau_text": tab.to_text(), "count": by_tab.get(tab, 0)}
            for tab in wanted
        ]
        for tab in wanted:
            lines.append(f"  {tab.to_text()}  ->  {by_tab.get(tab, 0)}")
    _emit(payload, "\n".join(lines), args.format)
    return 0


def cmd_verify(args) -> int:
    names = verify.SUITES if "all" in args.suite else tuple(dict.fromkeys(args.suite))
    reports = verify.run_suites(
        names,
        prime=args.prime,
        max_beta=args.max_beta,
        seed=args.seed,
        count=args.count,
        cap=args.cap,
    )
    payload = {
        "passed": all(r.passed for r in reports),
        "suites": [r.to_json() for r in reports],
    }
    print(json.dumps(payload, sort_keys=True))
    return 0 if payload["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hallkit",
        description="Hall polynomials of finite abelian p-groups via Klein tableaux.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("hall", help="compute a Hall polynomial")
    _add_type_flags(sp)
    sp.add_argument("--per-tableau", action="store_true", help="include the per-tableau breakdown")
    _add_format_flag(sp)
    sp.set_defaults(func=cmd_hall)

    sp = subs.add_parser("tableaux", help="enumerate LR or Klein tableaux of a type")
    sp.add_argument("kind", choices=("lr", "klein"))
    _add_type_flags(sp)
    sp.add_argument("--count", action="store_true", help="print only the number of tableaux")
    _add_format_flag(sp)
    sp.set_defaults(func=cmd_tableaux)

    sp = subs.add_parser("decompose", help="convert between tableaux and picket/bipicket sums")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--tableau", help="tableau as JSON or compact text")
    group.add_argument("--object", help="object text, e.g. 'T(4,2) + P(1,3)'")
    _add_format_flag(sp)
    sp.set_defaults(func=cmd_decompose)

    sp = subs.add_parser("embed", help="analyze a concrete embedding")
    sp.add_argument("what", choices=("tableau", "lr", "type"))
    sp.add_argument("--prime", type=int, required=True)
    sp.add_argument("--beta", required=True)
    sp.add_argument("--gens", default="", help="semicolon-separated coordinate vectors, e.g. '4,2;1,0'")
    sp.add_argument("--cap", type=int, default=None, help="override the ambient-order cap")
    _add_format_flag(sp)
    sp.set_defaults(func=cmd_embed)

    sp = subs.add_parser("oracle", help="brute-force subgroup counts")
    sp.add_argument("what", choices=("hall",))
    sp.add_argument("--prime", type=int, default=2)
    _add_type_flags(sp)
    sp.add_argument("--by-tableau", action="store_true")
    sp.add_argument("--subgroup-cap", type=int, default=None)
    _add_format_flag(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = subs.add_parser("verify", help="run the verification suites")
    sp.add_argument(
        "--suite",
        action="append",
        choices=verify.SUITES + ("all",),
        default=None,
        help="suite to run (repeatable); default all",
    )
    sp.add_argument("--prime", type=int, default=2)
    sp.add_argument("--max-beta", type=int, default=7)
    sp.add_argument("--seed", type=int, default=20260808)
    sp.add_argument("--count", type=int, default=500, help="random embeddings for theorem2")
    sp.add_argument("--cap", type=int, default=None)
    sp.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "suite", None) is None and args.command == "verify":
        args.suite = ["all"]
    try:
        return args.func(args)
    except HallkitError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 1
    except ValueError as exc:
        print(json.dumps({"error": "ValueError", "message": str(exc)}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
