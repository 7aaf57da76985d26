"""Command-line interface.

Five subcommands: expand (tableau-formula expansions in a chosen basis),
oracle (brute-force or operator chromatic function), tableaux (enumerate
the constrained tableaux), verify (identity checks), sweep (expansions for
every Hessenberg function of a given n as JSON lines).

All JSON documents carry schema "qchromatic/1" and are byte-identical
across runs for a fixed configuration and seed.  Exit codes: 0 success,
1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .exact import DEFAULT_SEED, RatFunc
from .expansion import e_expansion, hikita_coeff, hl_expansion, macdonald_coeff
from .interval import DyckWord, Hessenberg, from_dyck, enumerate_hessenberg
from .oracles import chromatic_brute, chromatic_via_operators
from .partitions import Partition, partitions_of
from .tableaux import enumerate_strip_tableaux, has_column_support
from .verify import check_example_n7, run_checks

SCHEMA = "qchromatic/1"


class SystemExit2(Exception):
    """Usage error carrying the violated condition."""


def _rf_json(rf: RatFunc) -> dict:
    return {"num": str(rf.num), "den": str(rf.den)}


def _parse_hessenberg(args) -> Hessenberg:
    if args.hessenberg is not None:
        try:
            values = [int(v) for v in args.hessenberg.split(",")]
        except ValueError:
            raise SystemExit2(f"--hessenberg expects comma-separated integers, "
                              f"got {args.hessenberg!r}")
        try:
            return Hessenberg(values)
        except ValueError as exc:
            raise SystemExit2(str(exc))
    try:
        return from_dyck(DyckWord(args.dyck))
    except ValueError as exc:
        raise SystemExit2(str(exc))


def _envelope(command: str, e: Hessenberg, seed: int) -> dict:
    return {
        "schema": SCHEMA,
        "command": command,
        "seed": seed,
        "input": {"hessenberg": list(e), "dyck": str(e.to_dyck()), "n": e.n},
    }


def _sorted_partitions(keys):
    return sorted(keys, key=lambda p: (p.size, p))


def cmd_expand(args) -> tuple[dict, int]:
    e = _parse_hessenberg(args)
    doc = _envelope("expand", e, args.seed)
    doc["basis"] = args.basis
    entries = []
    if args.basis == "e":
        exp = e_expansion(e)
        for lam in _sorted_partitions(exp.coefficients):
            entry = {"partition": list(lam),
                     "value": _rf_json(RatFunc(exp.coefficients[lam]))}
            if args.breakdown:
                entry["tableaux"] = [
                    {"rows": T.row_lists(), "value": _rf_json(term)}
                    for T, term in zip(exp.tableaux[lam], exp.tableau_terms[lam])]
            entries.append(entry)
    elif args.basis == "macdonald":
        for mu in partitions_of(e.n):
            value = macdonald_coeff(e, mu)
            if value.is_zero():
                continue
            entry = {"partition": list(mu), "value": _rf_json(value)}
            if args.breakdown:
                from .expansion import tableau_weight
                tabs = enumerate_strip_tableaux(e, mu)
                entry["tableaux"] = [
                    {"rows": T.row_lists(), "value": _rf_json(tableau_weight(T, e))}
                    for T in tabs]
            entries.append(entry)
    else:
        exp = hl_expansion(e)
        for lam in _sorted_partitions(exp.coefficients):
            entry = {"partition": list(lam),
                     "value": _rf_json(exp.coefficients[lam])}
            if args.breakdown:
                entry["tableaux"] = [
                    {"rows": T.row_lists(), "value": _rf_json(term)}
                    for T, term in zip(exp.tableaux[lam], exp.tableau_terms[lam])]
            entries.append(entry)
    doc["coefficients"] = entries
    return doc, 0


def cmd_oracle(args) -> tuple[dict, int]:
    e = _parse_hessenberg(args)
    doc = _envelope("oracle", e, args.seed)
    doc["method"] = args.method
    chi = (chromatic_brute(e) if args.method == "colorings"
           else chromatic_via_operators(e))
    doc["symfunc"] = chi.to_json_dict()
    return doc, 0


def cmd_tableaux(args) -> tuple[dict, int]:
    e = _parse_hessenberg(args)
    try:
        shape = Partition(int(v) for v in args.shape.split(","))
    except ValueError as exc:
        raise SystemExit2(str(exc))
    if shape.size != e.n:
        raise SystemExit2(f"shape {tuple(shape)} has size {shape.size}, "
                          f"but the graph has {e.n} vertices")
    doc = _envelope("tableaux", e, args.seed)
    tabs = enumerate_strip_tableaux(e, shape)
    if args.star:
        tabs = [T for T in tabs if has_column_support(T, e)]
    doc["star_filtered"] = bool(args.star)
    doc["tableaux"] = [T.row_lists() for T in tabs]
    doc["count"] = len(tabs)
    return doc, 0


def cmd_verify(args) -> tuple[dict, int]:
    names = args.checks.split(",") if args.checks else None
    try:
        results = run_checks(names, max_n=args.max_n, seed=args.seed)
    except ValueError as exc:
        raise SystemExit2(str(exc))
    if args.example_n7:
        results.append(check_example_n7(include_macdonald_route=args.full))
    doc = {
        "schema": SCHEMA,
        "command": "verify",
        "seed": args.seed,
        "input": {"hessenberg": [], "n": args.max_n},
        "checks": [r.as_dict() for r in results],
        "ok": all(r.ok for r in results),
    }
    return doc, 0 if doc["ok"] else 1


def _sweep_record(values) -> dict:
    e = Hessenberg(values)
    exp = e_expansion(e)
    return {
        "schema": SCHEMA,
        "command": "sweep",
        "input": {"hessenberg": list(e), "dyck": str(e.to_dyck()), "n": e.n},
        "coefficients": [
            {"partition": list(lam),
             "value": _rf_json(RatFunc(exp.coefficients[lam]))}
            for lam in sorted(exp.coefficients, key=lambda p: (p.size, p))],
    }


def cmd_sweep(args) -> tuple[list[dict], int]:
    functions = enumerate_hessenberg(args.n)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(_sweep_record, [tuple(e) for e in functions]))
    else:
        records = [_sweep_record(tuple(e)) for e in functions]
    return records, 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qchromatic",
        description="Exact expansions of q-chromatic symmetric functions of "
                    "unit interval graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_input(p):
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--hessenberg",
                           help="comma-separated values e(1),...,e(n)")
        group.add_argument("--dyck", help="Dyck word in W and S")

    def add_common(p):
        p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                       help="seed for the sample-point protocol")
        p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("expand", help="expansion coefficients in a basis")
    add_graph_input(p)
    add_common(p)
    p.add_argument("--basis", choices=("macdonald", "e", "hl"), default="e")
    p.add_argument("--breakdown", action="store_true",
                   help="include per-tableau summands")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("oracle", help="chromatic function by an oracle")
    add_graph_input(p)
    add_common(p)
    p.add_argument("--method", choices=("colorings", "operators"),
                   default="colorings")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("tableaux", help="enumerate constrained tableaux")
    add_graph_input(p)
    add_common(p)
    p.add_argument("--shape", required=True, help="comma-separated partition")
    p.add_argument("--star", action="store_true",
                   help="keep only tableaux with column support")
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("verify", help="run identity checks")
    add_common(p)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--checks", help="comma-separated subset of checks")
    p.add_argument("--example-n7", action="store_true",
                   help="compare against the stored n=7 golden tables")
    p.add_argument("--full", action="store_true",
                   help="include the slow exact (q,t) route in --example-n7")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="e-expansions for all functions of size n")
    add_common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1,
                   help="parallel workers; output order is deterministic")
    p.set_defaults(func=cmd_sweep)
    return parser


def _render(doc, fmt: str) -> str:
    if isinstance(doc, list):
        return "\n".join(json.dumps(rec, sort_keys=True) for rec in doc)
    if fmt == "text":
        return _render_text(doc)
    return json.dumps(doc, indent=2, sort_keys=True)


def _render_text(doc: dict) -> str:
    lines = [f"# {doc['command']}  n={doc['input'].get('n')}"]
    if "coefficients" in doc:
        for entry in doc["coefficients"]:
            value = entry["value"]
            body = value["num"] if value["den"] == "1" else \
                f"({value['num']})/({value['den']})"
            lines.append(f"{entry['partition']}: {body}")
    if "symfunc" in doc:
        for term in doc["symfunc"]["terms"]:
            coeff = term["coeff"]
            body = coeff["num"] if coeff["den"] == "1" else \
                f"({coeff['num']})/({coeff['den']})"
            lines.append(f"m{term['partition']}: {body}")
    if "tableaux" in doc and doc["command"] == "tableaux":
        for rows in doc["tableaux"]:
            lines.append(str(rows))
        lines.append(f"count: {doc['count']}")
    if "checks" in doc:
        for check in doc["checks"]:
            mark = "PASS" if check["ok"] else "FAIL"
            lines.append(f"[{mark}] {check['name']}: {check['statement']}"
                         + (f" ({check['details']})" if check["details"] else ""))
        lines.append("ok" if doc["ok"] else "FAILED")
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, status = args.func(args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(_render(doc, getattr(args, "format", "json")))
    return status


if __name__ == "__main__":
    sys.exit(main())
