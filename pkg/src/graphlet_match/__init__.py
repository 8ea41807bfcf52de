"""Subgraph matching by graphlet unification over minimum hub covers."""

from .errors import (
    CapacityError,
    GraphletMatchError,
    GraphValidationError,
    InvalidOrderingError,
    InvalidQueryError,
    ParseError,
    UnknownVertexError,
)
from .graph import (
    Graph,
    Graphlet,
    GraphletMetrics,
    graphlet_of,
    load_graph,
    metrics,
    parse_edge_list,
    parse_graphlet_xml,
    to_edge_list,
    to_graphlet_xml,
    to_graphlets,
    vertex_set,
)
from .hubcover import HubCover, covers, enumerate_minimum_hub_covers
from .matcher import SearchResult, SearchStats, find_solutions, is_inner_ordering
from .oracle import brute_force_match
from .ordering import (
    OrderingChoice,
    compare_selectivity,
    connected,
    enumerate_full_orderings,
    enumerate_mhc_orderings,
    select_best_ordering,
)
from .pipeline import match_auto

__version__ = "0.1.0"
