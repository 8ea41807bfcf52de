"""Brute-force enumeration of subgraph matches, used as ground truth.

Deliberately independent of the graphlet machinery: it keeps its own
adjacency sets and extends one query vertex at a time in a fixed order.
"""

from __future__ import annotations

from .errors import CapacityError
from .graph import Graph

MAX_QUERY_VERTICES = 8
MAX_DATA_VERTICES = 20


def brute_force_match(
    data: Graph,
    query: Graph,
    max_query_vertices: int = MAX_QUERY_VERTICES,
    max_data_vertices: int = MAX_DATA_VERTICES,
) -> list[dict[str, str]]:
    if len(query.vertices) > max_query_vertices or len(data.vertices) > max_data_vertices:
        raise CapacityError(
            f"oracle limited to {max_query_vertices} query / {max_data_vertices} data "
            f"vertices, got {len(query.vertices)} / {len(data.vertices)}"
        )
    adj: dict[str, set[str]] = {v: set() for v in data.vertices}
    for e in data.edges:
        u, v = tuple(e)
        adj[u].add(v)
        adj[v].add(u)
    qverts = sorted(query.vertices)
    # earlier query neighbors of each query vertex
    back = {
        v: [u for u in qverts[:i] if frozenset((u, v)) in query.edges]
        for i, v in enumerate(qverts)
    }
    targets = sorted(data.vertices)
    out: list[dict[str, str]] = []
    assign: dict[str, str] = {}

    def rec(i: int) -> None:
        if i == len(qverts):
            out.append(dict(assign))
            return
        v = qverts[i]
        taken = set(assign.values())
        for t in targets:
            if t in taken:
                continue
            if all(assign[u] in adj[t] for u in back[v]):
                assign[v] = t
                rec(i + 1)
                del assign[v]

    rec(0)
    return out
