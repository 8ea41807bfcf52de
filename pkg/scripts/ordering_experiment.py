"""Counter calibration on the bundled example.

Usage:
    python scripts/ordering_experiment.py [--full] [--jobs N] [--csv OUT]

Runs every minimum-hub-cover ordering in both unification modes, prints all
four counters next to the reference explored column and reports which
counter reproduces it.  With --full it also runs all 8! vertex orderings
(about five minutes on one core) and reports the extremes.
"""

from __future__ import annotations

import argparse
import csv
import time
from itertools import product

from graphlet_match import motivating
from graphlet_match.bench import CSV_COLUMNS, run_bench, scope_orderings
from graphlet_match.matcher import COUNTERS, MODES


def mhc_table(data, query):
    orderings = scope_orderings(query, "mhc")
    results = {}
    for mode in MODES:
        for row in run_bench(data, query, orderings, mode):
            results[mode, row.ordering] = row
    print(f"{'ordering':<10} {'ref':>5}  " + "  ".join(f"{m[:1]}:{c:<16}" for m, c in product(MODES, COUNTERS)))
    for o, ref in sorted(motivating.REFERENCE_EXPLORED.items(), key=lambda kv: (kv[1], kv[0])):
        cells = "  ".join(f"{results[m, o].counter(c):<18}" for m, c in product(MODES, COUNTERS))
        print(f"{','.join(o):<10} {ref:>5}  {cells}")
    for mode, c in product(MODES, COUNTERS):
        hits = sum(results[mode, o].counter(c) == v for o, v in motivating.REFERENCE_EXPLORED.items())
        print(f"{c:>16}/{mode:<6} matches {hits}/24 reference rows")
    return results


def full_table(data, query, jobs, out):
    t0 = time.time()
    rows = run_bench(data, query, scope_orderings(query, "all"), "strict", jobs=jobs)
    print(f"{len(rows)} orderings in {time.time() - t0:.0f}s")
    lo, hi = rows[0].counter("recursiveCalls"), rows[-1].counter("recursiveCalls")
    print(f"min recursiveCalls {lo} (reference best 309), max {hi} (reference worst 8815)")
    by_order = {r.ordering: r for r in rows}
    for name, o in [("best", motivating.BEST_FULL_ORDERING), ("worst", motivating.WORST_FULL_ORDERING)]:
        print(f"reference {name} {','.join(o)}: {by_order[o].stats.as_dict()}")
    if out:
        with open(out, "w", newline="") as fh:
            w = csv.writer(fh, delimiter=";")
            w.writerow(CSV_COLUMNS)
            for r in rows:
                d = r.as_dict()
                w.writerow([",".join(r.ordering), *(d[c] for c in COUNTERS), r.solutions])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--full", action="store_true", help="also run all 40320 vertex orderings")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--csv", help="write the full-ordering rows here")
    args = ap.parse_args()
    data, query = motivating.data_graph(), motivating.query_graph()
    mhc_table(data, query)
    if args.full:
        full_table(data, query, args.jobs, args.csv)


if __name__ == "__main__":
    main()
