"""Undirected simple graphs and their graphlet decomposition.

A graphlet is the triple ``<hub, neighbors, boundaries>`` where the boundaries
are the graph edges running between two neighbors of the hub.  Two text
formats are supported: a whitespace edge list and the nested XML graphlet
document (``graph`` > ``graphlet vertex=..`` > ``neighbor`` / ``boundary``).
"""

from __future__ import annotations

import re
import xml.etree.ElementTree as ET
from collections.abc import Iterable
from dataclasses import dataclass, field
from itertools import combinations

from .errors import GraphValidationError, ParseError, UnknownVertexError

Edge = frozenset  # frozenset of exactly two vertex labels

_WS = re.compile(r"\s")


def check_label(label: str) -> str:
    if not isinstance(label, str) or not label or _WS.search(label):
        raise GraphValidationError(f"invalid vertex label {label!r}")
    return label


def edge(u: str, v: str) -> frozenset[str]:
    if u == v:
        raise GraphValidationError(f"self-loop on vertex {u!r}")
    return frozenset((u, v))


def sorted_pair(e: Iterable[str]) -> tuple[str, str]:
    u, v = sorted(e)
    return u, v


@dataclass(frozen=True)
class Graph:
    vertices: frozenset[str]
    edges: frozenset[frozenset[str]]
    _adj: dict[str, frozenset[str]] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        vertices = frozenset(self.vertices)
        edges = frozenset(frozenset(e) for e in self.edges)
        for v in vertices:
            check_label(v)
        adj: dict[str, set[str]] = {v: set() for v in vertices}
        for e in edges:
            if len(e) != 2:
                raise GraphValidationError(f"edge {set(e)!r} is a self-loop or malformed")
            u, w = e
            if u not in adj or w not in adj:
                raise GraphValidationError(f"edge {u}-{w} has an undeclared endpoint")
            adj[u].add(w)
            adj[w].add(u)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_adj", {v: frozenset(n) for v, n in adj.items()})

    @classmethod
    def from_edges(
        cls, edges: Iterable[tuple[str, str]], vertices: Iterable[str] = ()
    ) -> Graph:
        es = {edge(u, v) for u, v in edges}
        vs = set(vertices)
        for e in es:
            vs |= e
        return cls(frozenset(vs), frozenset(es))

    def neighbors(self, v: str) -> frozenset[str]:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {v!r}") from None

    def has_edge(self, u: str, v: str) -> bool:
        return v in self._adj.get(u, ())

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def isolated_vertices(self) -> list[str]:
        return sorted(v for v, n in self._adj.items() if not n)

    def sorted_edges(self) -> list[tuple[str, str]]:
        return sorted(sorted_pair(e) for e in self.edges)

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class Graphlet:
    hub: str
    neighbors: frozenset[str]
    boundaries: frozenset[frozenset[str]]

    def __post_init__(self):
        if self.hub in self.neighbors:
            raise GraphValidationError(f"hub {self.hub!r} listed among its own neighbors")
        for b in self.boundaries:
            if len(b) != 2 or not b <= self.neighbors:
                raise GraphValidationError(
                    f"boundary {sorted(b)} of graphlet {self.hub!r} is not a pair of neighbors"
                )

    def __str__(self) -> str:
        ns = ", ".join(sorted(self.neighbors))
        bs = ", ".join("{%s, %s}" % sorted_pair(b) for b in sorted(map(sorted_pair, self.boundaries)))
        return f"<{self.hub}, {{{ns}}}, {{{bs}}}>"


@dataclass(frozen=True)
class GraphletMetrics:
    boundary_count: int
    free_neighbor_count: int

    def as_tuple(self) -> tuple[int, int]:
        return self.boundary_count, self.free_neighbor_count


def graphlet_of(g: Graph, v: str) -> Graphlet:
    ns = g.neighbors(v)
    bs = frozenset(frozenset(p) for p in combinations(sorted(ns), 2) if g.has_edge(*p))
    return Graphlet(v, ns, bs)


def to_graphlets(g: Graph) -> dict[str, Graphlet]:
    """Decompose ``g`` into one graphlet per vertex, keyed by hub."""
    return {v: graphlet_of(g, v) for v in sorted(g.vertices)}


def from_graphlets(graphlets: Iterable[Graphlet]) -> Graph:
    """Reassemble a graph from hub-neighbor edges."""
    vs: set[str] = set()
    es: set[frozenset[str]] = set()
    for gl in graphlets:
        vs.add(gl.hub)
        vs |= gl.neighbors
        es.update(frozenset((gl.hub, n)) for n in gl.neighbors)
    return Graph(frozenset(vs), frozenset(es))


def metrics(gl: Graphlet) -> GraphletMetrics:
    touched = set().union(*gl.boundaries) if gl.boundaries else set()
    return GraphletMetrics(len(gl.boundaries), len(gl.neighbors) - len(touched))


def vertex_set(gl: Graphlet) -> frozenset[str]:
    return gl.neighbors | {gl.hub}


# -- edge-list format ------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` edge lines and single-token vertex lines; ``#`` comments."""
    vs: set[str] = set()
    es: set[frozenset[str]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if len(tokens) > 2:
            raise ParseError(f"expected 1 or 2 tokens, got {len(tokens)}", lineno)
        if len(tokens) == 2:
            u, v = tokens
            if u == v:
                raise ParseError(f"self-loop on vertex {u!r}", lineno)
            es.add(frozenset(tokens))
        vs.update(tokens)
    return Graph(frozenset(vs), frozenset(es))


def to_edge_list(g: Graph) -> str:
    lines = [f"{u} {v}" for u, v in g.sorted_edges()]
    lines += g.isolated_vertices()
    return "".join(line + "\n" for line in lines)


# -- XML graphlet format ---------------------------------------------------


def _text(el: ET.Element, what: str) -> str:
    label = (el.text or "").strip()
    if not label or _WS.search(label):
        raise GraphValidationError(f"{what} has invalid vertex label {label!r}")
    return label


def parse_graphlet_xml(text: str) -> Graph:
    """Rebuild a graph from a graphlet document and check it is self-consistent.

    Vertices mentioned only as neighbors (a partial document) are allowed;
    boundary pairs then contribute their edges.  Every declared graphlet must
    equal the graphlet recomputed from the reconstructed graph.
    """
    try:
        root = ET.fromstring(text)
    except ET.ParseError as exc:
        raise ParseError(f"malformed XML: {exc}") from None
    if root.tag != "graph":
        raise GraphValidationError(f"root element must be <graph>, got <{root.tag}>")

    declared: dict[str, Graphlet] = {}
    for el in root:
        if el.tag != "graphlet":
            raise GraphValidationError(f"unexpected element <{el.tag}> under <graph>")
        hub = el.get("vertex")
        if hub is None:
            raise GraphValidationError("graphlet element without a vertex attribute")
        hub = check_label(hub.strip())
        if hub in declared:
            raise GraphValidationError(f"graphlet {hub!r} declared twice")
        neighbors: set[str] = set()
        boundaries: set[frozenset[str]] = set()
        for child in el:
            if child.tag == "neighbor":
                n = _text(child, f"neighbor of {hub!r}")
                if n == hub:
                    raise GraphValidationError(f"graphlet {hub!r} lists itself as neighbor")
                neighbors.add(n)
            elif child.tag == "boundary":
                ends = list(child)
                if len(ends) != 2 or any(e.tag != "vertex" for e in ends):
                    raise GraphValidationError(
                        f"boundary in graphlet {hub!r} must hold exactly two <vertex> children"
                    )
                pair = [_text(e, f"boundary vertex in {hub!r}") for e in ends]
                if pair[0] == pair[1]:
                    raise GraphValidationError(f"degenerate boundary in graphlet {hub!r}")
                boundaries.add(frozenset(pair))
            else:
                raise GraphValidationError(f"unexpected element <{child.tag}> in graphlet {hub!r}")
        for b in boundaries:
            if not b <= neighbors:
                raise GraphValidationError(
                    f"boundary {sorted(b)} of graphlet {hub!r} names a non-neighbor"
                )
        declared[hub] = Graphlet(hub, frozenset(neighbors), frozenset(boundaries))

    vs: set[str] = set()
    es: set[frozenset[str]] = set()
    for gl in declared.values():
        vs.add(gl.hub)
        vs |= gl.neighbors
        es.update(frozenset((gl.hub, n)) for n in gl.neighbors)
        es |= gl.boundaries
    g = Graph(frozenset(vs), frozenset(es))
    for hub, gl in declared.items():
        if graphlet_of(g, hub) != gl:
            raise GraphValidationError(
                f"graphlet {hub!r} is inconsistent with the rest of the document "
                f"(declared {gl}, reconstructed {graphlet_of(g, hub)})"
            )
    return g


def to_graphlet_xml(g: Graph) -> str:
    root = ET.Element("graph")
    for hub, gl in to_graphlets(g).items():
        el = ET.SubElement(root, "graphlet", vertex=hub)
        for n in sorted(gl.neighbors):
            ET.SubElement(el, "neighbor").text = n
        for u, w in sorted(sorted_pair(b) for b in gl.boundaries):
            b = ET.SubElement(el, "boundary")
            ET.SubElement(b, "vertex").text = u
            ET.SubElement(b, "vertex").text = w
    ET.indent(root, space=" ")
    return ET.tostring(root, encoding="unicode") + "\n"


def load_graph(path) -> Graph:
    """Read a graph from ``path``, sniffing XML by its first non-blank character."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("<"):
        return parse_graphlet_xml(text)
    return parse_edge_list(text)
