"""Command-line entry point: ``graphlet-match <command> ...``.

Exit status: 0 on success, 1 when a match/verify/bench run completes with a
negative result (no solutions, oracle disagreement, inconsistent rows), 2 on
any input or precondition error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys

from . import motivating
from .bench import CSV_COLUMNS, consistent, run_bench, scope_orderings
from .errors import GraphletMatchError
from .graph import graphlet_of, load_graph, metrics, to_edge_list, to_graphlet_xml
from .hubcover import covers, enumerate_minimum_hub_covers
from .matcher import COUNTERS, MODES, canonical, find_solutions
from .oracle import brute_force_match
from .ordering import select_best_ordering
from .pipeline import match_auto

log = logging.getLogger("graphlet_match")


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, ensure_ascii=False)
    sys.stdout.write("\n")


def _parse_ordering(text: str) -> tuple[str, ...]:
    return tuple(v.strip() for v in text.split(",") if v.strip())


def cmd_match(args) -> int:
    data, query = load_graph(args.data), load_graph(args.query)
    if args.ordering and args.ordering != "auto":
        ordering = _parse_ordering(args.ordering)
        result = find_solutions(
            data, query, ordering, mode=args.mode, trace=args.trace,
            require_cover=not args.allow_any_ordering,
        )
        cover = sorted(ordering) if covers(query, ordering) else None
    else:
        auto = match_auto(data, query, mode=args.mode, trace=args.trace)
        result, ordering = auto.result, auto.choice.ordering
        cover = list(auto.choice.cover.sorted())
    stats = result.stats.as_dict()
    stats["noMatch"] = not result.matched
    out = {
        "solutions": result.solutions,
        "stats": stats,
        "ordering": list(ordering),
        "cover": cover,
        "warnings": result.warnings,
    }
    if args.trace:
        out["trace"] = canonical(dict(s) for s in result.trace)
    if args.format == "table":
        keys = sorted(query.vertices)
        print("\t".join(keys))
        for s in result.solutions:
            print("\t".join(s[k] for k in keys))
        print(f"# {len(result.solutions)} solutions; ordering {','.join(ordering)}; "
              + " ".join(f"{k}={v}" for k, v in stats.items()), file=sys.stderr)
    else:
        _emit(out)
    for w in result.warnings:
        log.warning(w)
    return 0 if result.solutions else 1


def cmd_covers(args) -> int:
    query = load_graph(args.query)
    found = enumerate_minimum_hub_covers(query, args.max_vertices)
    if args.format == "table":
        print(f"size {len(found[0])}")
        for c in found:
            print(" ".join(c.sorted()))
    else:
        _emit({"size": len(found[0]), "covers": [list(c.sorted()) for c in found]})
    return 0


def cmd_order(args) -> int:
    query = load_graph(args.query)
    found = enumerate_minimum_hub_covers(query, args.max_vertices)
    choice = select_best_ordering(query, found)
    rows = [
        (v, *metrics(graphlet_of(query, v)).as_tuple()) for v in sorted(query.vertices)
    ]
    notes = motivating.metrics_discrepancies(query)
    if args.format == "json":
        _emit({
            "metrics": [{"graphlet": v, "boundaries": b, "freeNeighbors": f} for v, b, f in rows],
            "cover": list(choice.cover.sorted()),
            "ordering": list(choice.ordering),
            "warnings": list(choice.warnings),
            "notes": notes,
        })
    else:
        print("graphlet\tboundaries\tfree")
        for v, b, f in rows:
            print(f"{v}\t{b}\t{f}")
        print(f"cover\t{' '.join(choice.cover.sorted())}")
        print(f"ordering\t{','.join(choice.ordering)}")
        for w in choice.warnings:
            print(f"warning\t{w}")
        for n in notes:
            print(f"note\t{n}")
    return 0


def cmd_bench(args) -> int:
    data, query = load_graph(args.data), load_graph(args.query)
    orderings = scope_orderings(query, args.scope, args.seed)
    rows = run_bench(data, query, orderings, args.mode, args.counter, args.jobs)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, delimiter=";", lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in rows:
            d = r.as_dict()
            w.writerow([",".join(r.ordering), *(d[c] for c in COUNTERS), r.solutions])
        sys.stdout.write(buf.getvalue())
    elif args.format == "table":
        print("\t".join(CSV_COLUMNS))
        for r in rows:
            d = r.as_dict()
            print("\t".join([",".join(r.ordering), *(str(d[c]) for c in COUNTERS), str(r.solutions)]))
    else:
        _emit({"counter": args.counter, "mode": args.mode, "rows": [r.as_dict() for r in rows]})
    if not consistent(rows):
        log.error("orderings disagree on the number of solutions")
        return 1
    return 0


def cmd_convert(args) -> int:
    g = load_graph(args.input)
    text = to_edge_list(g) if args.to == "edgelist" else to_graphlet_xml(g)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    data, query = load_graph(args.data), load_graph(args.query)
    expected = brute_force_match(data, query)
    auto = match_auto(data, query, mode=args.mode)
    got = auto.result.solutions
    equal = {frozenset(s.items()) for s in got} == {frozenset(s.items()) for s in expected}
    _emit({
        "equal": equal,
        "matcher": len(got),
        "oracle": len(expected),
        "ordering": list(auto.choice.ordering),
    })
    return 0 if equal else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="graphlet-match", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def mode_opt(sp):
        sp.add_argument("--mode", choices=MODES, default="strict")

    m = sub.add_parser("match", help="find all matches of QUERY in DATA")
    m.add_argument("data")
    m.add_argument("query")
    g = m.add_mutually_exclusive_group()
    g.add_argument("--ordering", help="comma-separated query vertices, or 'auto'")
    g.add_argument("--auto", dest="ordering", action="store_const", const="auto")
    mode_opt(m)
    m.add_argument("--allow-any-ordering", action="store_true",
                   help="skip the hub-cover check on --ordering")
    m.add_argument("--trace", action="store_true", help="include the explored states")
    m.add_argument("--format", choices=("json", "table"), default="json")
    m.set_defaults(func=cmd_match)

    c = sub.add_parser("covers", help="list all minimum hub covers of QUERY")
    c.add_argument("query")
    c.add_argument("--max-vertices", type=int, default=20)
    c.add_argument("--format", choices=("json", "table"), default="json")
    c.set_defaults(func=cmd_covers)

    o = sub.add_parser("order", help="graphlet metrics and greedy cover ordering")
    o.add_argument("query")
    o.add_argument("--max-vertices", type=int, default=20)
    o.add_argument("--format", choices=("json", "table"), default="table")
    o.set_defaults(func=cmd_order)

    b = sub.add_parser("bench", help="search counters for many orderings")
    b.add_argument("data")
    b.add_argument("query")
    b.add_argument("--scope", default="mhc", help="mhc, all or sample:N")
    b.add_argument("--seed", type=int, default=0)
    mode_opt(b)
    b.add_argument("--counter", choices=COUNTERS, default="recursiveCalls")
    b.add_argument("--format", choices=("csv", "json", "table"), default="csv")
    b.add_argument("--jobs", type=int, default=1)
    b.set_defaults(func=cmd_bench)

    v = sub.add_parser("convert", help="convert between edge list and graphlet XML")
    v.add_argument("input")
    v.add_argument("--to", choices=("edgelist", "graphlet-xml"), required=True)
    v.add_argument("-o", "--output")
    v.set_defaults(func=cmd_convert)

    f = sub.add_parser("verify", help="cross-check the matcher against brute force")
    f.add_argument("data")
    f.add_argument("query")
    mode_opt(f)
    f.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
    )
    try:
        return args.func(args)
    except (GraphletMatchError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
