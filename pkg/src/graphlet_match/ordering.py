"""Selectivity scoring and greedy selection of a hub cover processing order."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from itertools import permutations

from .errors import CapacityError, GraphletMatchError
from .graph import Graph, Graphlet, GraphletMetrics, graphlet_of, metrics, vertex_set
from .hubcover import HubCover

DEFAULT_MAX_FULL_ORDERING_VERTICES = 9

Ordering = tuple[str, ...]


def connected(g1: Graphlet, g2: Graphlet) -> bool:
    return not vertex_set(g1).isdisjoint(vertex_set(g2))


def selectivity_key(m: GraphletMetrics) -> tuple[int, int]:
    """Sort key: smaller means more selective.

    More boundaries first; among equal non-zero boundary counts fewer free
    neighbors wins, and with zero boundaries more free neighbors wins.
    """
    b, f = m.boundary_count, m.free_neighbor_count
    return (-b, f if b > 0 else -f)


def compare_selectivity(a: GraphletMetrics, b: GraphletMetrics) -> int:
    """-1 if ``a`` is more selective than ``b``, 1 if less, 0 on a tie."""
    ka, kb = selectivity_key(a), selectivity_key(b)
    return (ka > kb) - (ka < kb)


@dataclass(frozen=True)
class OrderingChoice:
    cover: HubCover
    ordering: Ordering
    warnings: tuple[str, ...] = field(default=())


def select_best_ordering(
    q: Graph,
    covers: Iterable[HubCover],
    candidate_counts: Mapping[str, int] | None = None,
) -> OrderingChoice:
    """Greedily pick a hub cover and its processing order.

    Each step takes the most selective graphlet among surviving covers'
    unpicked members that shares a vertex with the graphlets picked so far,
    then drops covers not containing it.  Ties go to the smaller label.

    ``candidate_counts`` optionally maps query vertices to an externally
    estimated number of matching data graphlets; it breaks selectivity ties
    (fewer candidates first) before the label tie-break.
    """
    remaining = [c.members for c in covers]
    if not remaining:
        raise GraphletMatchError("no hub covers to choose from")
    counts = candidate_counts or {}

    def rank(v: str):
        return (selectivity_key(metrics(graphlet_of(q, v))), counts.get(v, 0), v)

    picked: list[str] = []
    reach: set[str] = set()
    warnings: list[str] = []
    while True:
        done = [c for c in remaining if c <= set(picked)]
        if done:
            break
        pool = {v for c in remaining for v in c} - set(picked)
        candidates = pool
        if picked:
            candidates = {v for v in pool if not vertex_set(graphlet_of(q, v)).isdisjoint(reach)}
            if not candidates:
                candidates = pool
                warnings.append(
                    f"step {len(picked)}: no candidate graphlet is connected to "
                    f"{tuple(picked)}; falling back to a cartesian product"
                )
        best = min(candidates, key=rank)
        picked.append(best)
        reach |= vertex_set(graphlet_of(q, best))
        remaining = [c for c in remaining if best in c]
    return OrderingChoice(HubCover(done[0]), tuple(picked), tuple(warnings))


def enumerate_mhc_orderings(covers: Iterable[HubCover]) -> list[Ordering]:
    out = {p for c in covers for p in permutations(sorted(c.members))}
    return sorted(out)


def enumerate_full_orderings(
    q: Graph, max_vertices: int = DEFAULT_MAX_FULL_ORDERING_VERTICES
) -> Iterator[Ordering]:
    """Lazily yield every permutation of the query's vertices."""
    if len(q.vertices) > max_vertices:
        raise CapacityError(
            f"{len(q.vertices)}! orderings requested; cap is {max_vertices} vertices"
        )
    return permutations(sorted(q.vertices))


def is_connected_ordering(q: Graph, ordering: Iterable[str]) -> bool:
    """True when each graphlet after the first touches an earlier one."""
    reach: set[str] = set()
    for i, v in enumerate(ordering):
        vs = vertex_set(graphlet_of(q, v))
        if i and reach.isdisjoint(vs):
            return False
        reach |= vs
    return True
