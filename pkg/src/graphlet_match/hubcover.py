"""Hub covers: vertex sets whose graphlets account for every edge.

An edge is covered by a member ``m`` when it is incident to ``m`` or when both
endpoints are neighbors of ``m`` (the edge is one of ``m``'s boundaries).
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

from .errors import CapacityError, InvalidQueryError, UnknownVertexError
from .graph import Graph

DEFAULT_MAX_VERTICES = 20


@dataclass(frozen=True)
class HubCover:
    members: frozenset[str]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def sorted(self) -> tuple[str, ...]:
        return tuple(sorted(self.members))


def covers(q: Graph, members: Iterable[str]) -> bool:
    m = frozenset(members)
    unknown = m - q.vertices
    if unknown:
        raise UnknownVertexError(f"not query vertices: {sorted(unknown)}")
    for e in q.edges:
        if e & m:
            continue
        u, v = e
        # boundary of some member: both endpoints adjacent to it
        if not (q.neighbors(u) & q.neighbors(v) & m):
            return False
    return True


def enumerate_minimum_hub_covers(
    q: Graph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> list[HubCover]:
    """All minimum hub covers of ``q``, canonically sorted.

    Subsets are tried by increasing size; the first size admitting a cover
    is the minimum and every cover of that size is returned.
    """
    if not q.edges:
        raise InvalidQueryError("query graph has no edges; hub covers are undefined")
    if len(q.vertices) > max_vertices:
        raise CapacityError(
            f"query has {len(q.vertices)} vertices, above the exhaustive-search cap of "
            f"{max_vertices}; supply hub covers explicitly instead"
        )
    vs = sorted(q.vertices)
    for k in range(1, len(vs) + 1):
        found = [HubCover(frozenset(c)) for c in combinations(vs, k) if covers(q, c)]
        if found:
            return sorted(found, key=HubCover.sorted)
    raise AssertionError("the full vertex set always covers a graph")
