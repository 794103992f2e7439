"""Command-line surface.

Exit codes: 0 success, 1 domain failure (bad graph6 input, not-in-family
certificates, failed claim suites), 2 usage errors.  Results go to stdout;
diagnostics and JSON stats go to stderr or the --stats path.  Every
subcommand reads graph6 from files or from stdin via ``-``.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from typing import Iterator, Sequence

from . import certify as certify_mod
from .claims import bull_equivalence, check_p3_2p1_freeness, check_p3p1_freeness
from .claims import conjecture_slice as conjecture_slice_fn
from .claims import max_antichain, sperner_bound, SetFamily
from .coloring import chromatic_number, k_colourable
from .criticality import criticality_failure
from .enumeration import EnumerationConfig, EnumerationReport, enumerate_critical
from .graphs import Graph, Graph6Error, emit_graph6, iter_graph6, parse_graph6
from .iso import canonical_form
from .patterns import PatternError, catalog_entries, realize
from .search import find_induced

SCHEMA = 1


class _InputError(Exception):
    pass


def _iter_lines(paths: Sequence[str]) -> Iterator[str]:
    for path in paths or ["-"]:
        if path == "-":
            yield from sys.stdin
        else:
            with open(path, "r", encoding="ascii") as fh:
                yield from fh


def _iter_graphs(paths: Sequence[str]) -> Iterator[Graph]:
    for line in _iter_lines(paths):
        s = line.strip()
        if not s or s.startswith(">>"):
            continue
        try:
            yield parse_graph6(s)
        except Graph6Error as exc:
            raise _InputError(f"bad graph6 line {s!r}: {exc}") from exc


def _pattern(spec: str) -> Graph:
    try:
        return realize(spec)
    except PatternError:
        pass
    try:
        return parse_graph6(spec)
    except Graph6Error as exc:
        raise _InputError(f"{spec!r} is neither a known pattern name nor graph6") from exc


def _report_json(report: EnumerationReport, cfg: EnumerationConfig) -> dict:
    return {
        "schema": SCHEMA,
        "k": cfg.k,
        "forbidden": [emit_graph6(p) for p in cfg.forbidden],
        "max_order": cfg.max_order,
        "counts_by_order": {str(n): c for n, c in report.counts_by_order.items()},
        "total": len(report.found),
        "complete": report.complete,
        "stats": dataclasses.asdict(report.stats),
    }


def _write_stats(payload: dict, path: str | None) -> None:
    text = json.dumps(payload, sort_keys=True)
    if path is None or path == "-":
        print(text, file=sys.stderr)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _cmd_enumerate(args: argparse.Namespace) -> int:
    forbidden = tuple(_pattern(spec) for spec in args.forbid or [])
    seeds: tuple[Graph, ...] = ()
    if args.seeds:
        with open(args.seeds, "r", encoding="ascii") as fh:
            seeds = tuple(iter_graph6(fh))
    cfg = EnumerationConfig(
        k=args.k,
        forbidden=forbidden,
        max_order=args.max_order,
        prune_comparable=not args.no_comparable_pruning,
        seed_graphs=seeds,
    )
    report = enumerate_critical(cfg, workers=args.threads)
    for g in report.found:
        print(emit_graph6(g))
    _write_stats(_report_json(report, cfg), args.stats)
    return 0


def _cmd_certify(args: argparse.Namespace) -> int:
    if args.family:
        names = args.family.split(",")
        if names[0] not in ("cogem", "co-gem"):
            raise _InputError("--family must start with 'cogem'")
        forbidden = [realize("co-gem")] + [_pattern(n) for n in names[1:]]
    else:
        forbidden = [realize("co-gem")]
    if args.list:
        graphs = list(iter_graph6(_iter_lines([args.list])))
        clist = certify_mod.CriticalList.build(args.k, tuple(forbidden), graphs, "file")
    else:
        if len(forbidden) != 1:
            raise _InputError("no shipped list for that family; pass --list")
        clist = certify_mod.shipped_critical_list(args.k)
    status = 0
    for g in _iter_graphs(args.files):
        try:
            cert = certify_mod.certify_colourable(g, args.k, clist)
        except certify_mod.IncompleteCriticalListError as exc:
            print(json.dumps({"schema": SCHEMA, "error": str(exc)}))
            status = 1
            continue
        ok, reason = certify_mod.verify_certificate(g, args.k, cert)
        payload: dict = {"schema": SCHEMA, "verified": ok}
        if not ok:
            payload["reason"] = reason
        if isinstance(cert, certify_mod.Colourable):
            payload["verdict"] = "colourable"
            payload["colouring"] = list(cert.colouring.colours)
        elif isinstance(cert, certify_mod.NotColourable):
            payload["verdict"] = "not-colourable"
            payload["embedding"] = list(cert.embedding.vertices)
            payload["pattern"] = emit_graph6(cert.embedding.pattern)
        else:
            payload["verdict"] = "not-in-family"
            payload["embedding"] = list(cert.violation.embedding.vertices)
            payload["pattern"] = emit_graph6(cert.violation.embedding.pattern)
            status = 1
        print(json.dumps(payload))
    return status


def _cmd_chromatic(args: argparse.Namespace) -> int:
    for g in _iter_graphs(args.files):
        chi = chromatic_number(g)
        if args.witness:
            col = k_colourable(g, chi)
            assert col is not None
            print(f"{chi}\t{','.join(map(str, col.colours))}")
        else:
            print(chi)
    return 0


def _cmd_critical_check(args: argparse.Namespace) -> int:
    for g in _iter_graphs(args.files):
        reason = criticality_failure(g, args.k)
        print("critical" if reason is None else f"not-critical\t{reason}")
    return 0


def _cmd_find_induced(args: argparse.Namespace) -> int:
    pattern = _pattern(args.pattern)
    for g in _iter_graphs(args.files):
        emb = find_induced(g, pattern)
        print("free" if emb is None else ",".join(map(str, emb.vertices)))
    return 0


def _cmd_canon(args: argparse.Namespace) -> int:
    forms = [(g.n, canonical_form(g)) for g in _iter_graphs(args.files)]
    forms.sort()
    for _, word in forms:
        print(word)
    return 0


def _cmd_catalog(args: argparse.Namespace) -> int:
    if args.name:
        print(emit_graph6(_pattern(args.name)))
        return 0
    for name, g in catalog_entries():
        print(f"{name}\t{emit_graph6(g)}")
    return 0


def _claims_sperner() -> dict:
    import random

    rng = random.Random(20260810)
    checked = 0
    for n in range(0, 4):
        members = list(range(1 << n))
        for picks in range(1 << len(members)):
            fam = SetFamily(n, tuple(m for m in members if (picks >> m) & 1))
            if len(fam.members) > 16:
                continue
            if max_antichain(fam) > sperner_bound(n):
                return {"pass": False, "counterexample_ground": n}
            checked += 1
    for _ in range(1000):
        n = rng.randint(1, 10)
        size = rng.randint(1, 12)
        fam = SetFamily(
            n, tuple({rng.randrange(1 << n) for _ in range(size)}), allow_duplicates=False
        )
        if max_antichain(fam) > sperner_bound(n):
            return {"pass": False, "counterexample_ground": n}
        checked += 1
    return {"pass": True, "families_checked": checked}


def _cmd_claims(args: argparse.Namespace) -> int:
    payload: dict = {"schema": SCHEMA, "suite": args.suite}
    if args.suite == "sperner":
        payload.update(_claims_sperner())
    elif args.suite == "p3p1-bound":
        cfg = EnumerationConfig(
            k=5,
            forbidden=(realize("co-gem"), realize("P5"), realize("P3+P2")),
            max_order=args.max_order,
        )
        report = enumerate_critical(cfg, workers=args.threads)
        results = [check_p3p1_freeness(g, 5, 1) for g in report.found]
        payload.update(
            {"pass": all(results), "graphs_checked": len(results), "complete": report.complete}
        )
    elif args.suite == "p3-2p1":
        cfg = EnumerationConfig(
            k=5,
            forbidden=(realize("co-gem"), realize("paw+P1")),
            max_order=args.max_order,
        )
        report = enumerate_critical(cfg, workers=args.threads)
        results = [check_p3_2p1_freeness(g) for g in report.found]
        payload.update(
            {"pass": all(results), "graphs_checked": len(results), "complete": report.complete}
        )
    elif args.suite == "conjecture":
        report = conjecture_slice_fn(args.k, args.max_order, workers=args.threads)
        payload.update(
            {
                "pass": not report.found,
                "verdict": "supports" if not report.found else "refutes",
                "found": len(report.found),
                "complete": report.complete,
            }
        )
    elif args.suite == "bull":
        ok = bull_equivalence(args.k, args.max_order, workers=args.threads)
        payload.update({"pass": ok})
    print(json.dumps(payload, sort_keys=True))
    return 0 if payload.get("pass") else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="critgraph",
        description="Enumerate k-vertex-critical graphs in H-free families and "
        "certify k-colourability.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="exhaustive critical-graph census")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--forbid", action="append", metavar="NAME|G6")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--seeds", help="graph6 file of starting graphs")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.add_argument("--stats", help="write the JSON report here ('-' = stderr)")
    p.add_argument("--no-comparable-pruning", action="store_true")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("certify", help="certifying k-colourability decision")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--family", default="cogem", metavar="cogem[,NAME...]")
    p.add_argument("--list", help="graph6 file with the (k+1)-critical list")
    p.add_argument("files", nargs="*")
    p.set_defaults(fn=_cmd_certify)

    p = sub.add_parser("chromatic", help="exact chromatic number per line")
    p.add_argument("--witness", action="store_true")
    p.add_argument("files", nargs="*")
    p.set_defaults(fn=_cmd_chromatic)

    p = sub.add_parser("critical-check", help="k-vertex-criticality per line")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("files", nargs="*")
    p.set_defaults(fn=_cmd_critical_check)

    p = sub.add_parser("find-induced", help="induced-pattern search per line")
    p.add_argument("--pattern", required=True, metavar="NAME|G6")
    p.add_argument("files", nargs="*")
    p.set_defaults(fn=_cmd_find_induced)

    p = sub.add_parser("canon", help="canonical graph6, sorted")
    p.add_argument("files", nargs="*")
    p.set_defaults(fn=_cmd_canon)

    p = sub.add_parser("catalog", help="list named patterns or emit one")
    p.add_argument("name", nargs="?")
    p.set_defaults(fn=_cmd_catalog)

    p = sub.add_parser("claims", help="structural claim suites")
    p.add_argument(
        "--suite",
        required=True,
        choices=["sperner", "p3p1-bound", "p3-2p1", "conjecture", "bull"],
    )
    p.add_argument("-k", type=int, default=4)
    p.add_argument("--max-order", type=int, default=9)
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.set_defaults(fn=_cmd_claims)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (_InputError, ValueError, certify_mod.CriticalListError, OSError) as exc:
        print(f"critgraph: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
