from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .hubcover import DEFAULT_MAX_VERTICES, enumerate_minimum_hub_covers
from .matcher import Mode, SearchResult, check_query, find_solutions
from .ordering import OrderingChoice, select_best_ordering


@dataclass
class AutoMatch:
    choice: OrderingChoice
    result: SearchResult


def match_auto(
    data: Graph,
    query: Graph,
    mode: Mode = "strict",
    trace: bool = False,
    max_cover_vertices: int = DEFAULT_MAX_VERTICES,
) -> AutoMatch:
    """Enumerate minimum hub covers, pick the greedy ordering and search with it."""
    check_query(query)
    covers = enumerate_minimum_hub_covers(query, max_cover_vertices)
    choice = select_best_ordering(query, covers)
    result = find_solutions(data, query, choice.ordering, mode=mode, trace=trace)
    result.warnings[:0] = choice.warnings
    return AutoMatch(choice, result)
