"""Run the search under many orderings and tabulate the counters."""

from __future__ import annotations

import random
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import islice

from .graph import Graph, to_graphlets
from .hubcover import enumerate_minimum_hub_covers
from .matcher import COUNTERS, Mode, SearchStats, find_solutions
from .ordering import Ordering, enumerate_full_orderings, enumerate_mhc_orderings

CSV_COLUMNS = ("ordering", *COUNTERS, "solutions")


@dataclass(frozen=True)
class BenchRow:
    ordering: Ordering
    stats: SearchStats
    solutions: int

    def counter(self, name: str) -> int:
        return self.stats.as_dict()[name]

    def as_dict(self) -> dict:
        counters = self.stats.as_dict()
        return {
            "ordering": list(self.ordering),
            **{c: counters[c] for c in COUNTERS},
            "solutions": self.solutions,
        }


def parse_scope(scope: str) -> tuple[str, int | None]:
    if scope in ("mhc", "mhc-orderings"):
        return "mhc", None
    if scope in ("all", "all-permutations"):
        return "all", None
    if scope.startswith("sample:"):
        n = int(scope.split(":", 1)[1])
        if n < 1:
            raise ValueError("sample size must be positive")
        return "sample", n
    raise ValueError(f"unknown bench scope {scope!r}; use mhc, all or sample:N")


def scope_orderings(query: Graph, scope: str, seed: int = 0) -> list[Ordering]:
    kind, n = parse_scope(scope)
    if kind == "mhc":
        return enumerate_mhc_orderings(enumerate_minimum_hub_covers(query))
    if kind == "all":
        return list(enumerate_full_orderings(query))
    # validate the cap before sampling
    enumerate_full_orderings(query)
    rng = random.Random(seed)
    vs = sorted(query.vertices)
    return [tuple(rng.sample(vs, len(vs))) for _ in range(n)]


def _run_chunk(args) -> list[BenchRow]:
    data, query, orderings, mode = args
    index, cache = to_graphlets(data), {}
    rows = []
    for o in orderings:
        r = find_solutions(data, query, o, mode=mode, data_graphlets=index, cache=cache)
        rows.append(BenchRow(tuple(o), r.stats, len(r.solutions)))
    return rows


def run_bench(
    data: Graph,
    query: Graph,
    orderings: Iterable[Sequence[str]],
    mode: Mode = "strict",
    counter: str = "recursiveCalls",
    jobs: int = 1,
) -> list[BenchRow]:
    """One row per ordering, sorted ascending by ``counter`` then ordering."""
    if counter not in COUNTERS:
        raise ValueError(f"unknown counter {counter!r}; choose from {', '.join(COUNTERS)}")
    orderings = [tuple(o) for o in orderings]
    if jobs <= 1:
        rows = _run_chunk((data, query, orderings, mode))
    else:
        size = max(1, -(-len(orderings) // (jobs * 4)))
        it = iter(orderings)
        chunks = iter(lambda: list(islice(it, size)), [])
        with ProcessPoolExecutor(jobs) as pool:
            rows = [
                row
                for part in pool.map(_run_chunk, ((data, query, c, mode) for c in chunks))
                for row in part
            ]
    return sorted(rows, key=lambda r: (r.counter(counter), r.ordering))


def consistent(rows: Sequence[BenchRow]) -> bool:
    return len({r.solutions for r in rows}) <= 1
