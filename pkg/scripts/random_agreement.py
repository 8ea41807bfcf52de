"""Matcher vs. brute force on seeded random instances, with ordering statistics.

Usage:
    python scripts/random_agreement.py [--n 500] [--seed 1]

For each instance the greedy ordering is compared against every other
minimum-hub-cover ordering by recursive-call count; the script reports how
often greedy lands in the best quartile.
"""

import argparse
import random
import statistics
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from helpers import as_set, random_instance  # noqa: E402

from graphlet_match.bench import run_bench  # noqa: E402
from graphlet_match.hubcover import enumerate_minimum_hub_covers  # noqa: E402
from graphlet_match.oracle import brute_force_match  # noqa: E402
from graphlet_match.ordering import enumerate_mhc_orderings  # noqa: E402
from graphlet_match.pipeline import match_auto  # noqa: E402


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=500)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    disagreements, ranks = 0, []
    for _ in range(args.n):
        data, query = random_instance(rng)
        auto = match_auto(data, query)
        if as_set(auto.result.solutions) != as_set(brute_force_match(data, query)):
            disagreements += 1
        rows = run_bench(data, query, enumerate_mhc_orderings(enumerate_minimum_hub_covers(query)))
        counts = [r.counter("recursiveCalls") for r in rows]
        mine = auto.result.stats.recursive_calls
        ranks.append(sum(c < mine for c in counts) / len(counts))
    print(f"instances {args.n}, oracle disagreements {disagreements}")
    print(f"greedy ordering: mean fraction of MHC orderings strictly better {statistics.mean(ranks):.3f}")
    print(f"greedy in best quartile: {sum(r <= 0.25 for r in ranks) / len(ranks):.1%}")
    return 1 if disagreements else 0


if __name__ == "__main__":
    sys.exit(main())
