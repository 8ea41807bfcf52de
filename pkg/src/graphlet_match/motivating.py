"""The bundled 16-vertex data graph / 8-vertex query graph example."""

from importlib import resources

from .graph import Graph, parse_edge_list, parse_graphlet_xml

# Published (boundaries, free neighbors) per query graphlet.  Row 5 disagrees
# with the structure of the query graph; see ``metrics_discrepancies``.
REFERENCE_METRICS: dict[str, tuple[int, int]] = {
    "1": (1, 0),
    "2": (1, 0),
    "3": (2, 0),
    "4": (1, 0),
    "5": (1, 0),
    "6": (1, 2),
    "7": (0, 2),
    "8": (0, 2),
}

# Published explored-count column for the 24 minimum-hub-cover orderings.
REFERENCE_EXPLORED: dict[tuple[str, ...], int] = {
    ("3", "5", "8"): 189,
    ("3", "8", "5"): 189,
    ("7", "6", "1"): 207,
    ("7", "6", "2"): 207,
    ("7", "6", "3"): 207,
    ("8", "5", "3"): 211,
    ("5", "8", "3"): 211,
    ("1", "6", "7"): 233,
    ("2", "6", "7"): 233,
    ("3", "6", "7"): 245,
    ("8", "3", "5"): 279,
    ("5", "3", "8"): 279,
    ("6", "7", "1"): 297,
    ("6", "7", "2"): 297,
    ("6", "7", "3"): 297,
    ("6", "1", "7"): 425,
    ("6", "2", "7"): 425,
    ("6", "3", "7"): 425,
    ("3", "7", "6"): 1081,
    ("7", "3", "6"): 1171,
    ("1", "7", "6"): 2029,
    ("2", "7", "6"): 2029,
    ("7", "1", "6"): 2131,
    ("7", "2", "6"): 2131,
}

BEST_FULL_ORDERING = ("3", "5", "8", "6", "1", "2", "4", "7")
WORST_FULL_ORDERING = ("5", "2", "7", "1", "8", "4", "6", "3")

MINIMUM_HUB_COVERS = [
    frozenset({"1", "6", "7"}),
    frozenset({"2", "6", "7"}),
    frozenset({"3", "6", "7"}),
    frozenset({"3", "5", "8"}),
]


def fixture_path(name: str):
    return resources.files(__package__).joinpath("fixtures").joinpath(name)


def _read(name: str) -> str:
    return fixture_path(name).read_text(encoding="utf-8")


def data_graph() -> Graph:
    return parse_edge_list(_read("data.edges"))


def query_graph() -> Graph:
    return parse_edge_list(_read("query.edges"))


def data_graph_xml() -> Graph:
    return parse_graphlet_xml(_read("data.xml"))


def query_graph_xml() -> Graph:
    return parse_graphlet_xml(_read("query.xml"))


def metrics_discrepancies(q: Graph) -> list[str]:
    """Notes for rows where computed metrics differ from ``REFERENCE_METRICS``.

    Only meaningful for the bundled query graph; any other graph gets no notes.
    """
    from .graph import graphlet_of, metrics

    if q != query_graph():
        return []
    notes = []
    for v, ref in sorted(REFERENCE_METRICS.items()):
        got = metrics(graphlet_of(q, v)).as_tuple()
        if got != ref:
            notes.append(
                f"graphlet {v} computes to (boundaries, free) = {got}; the reference "
                f"table for this example lists {ref}, which contradicts the graph structure"
            )
    return notes
