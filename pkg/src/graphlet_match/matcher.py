"""Recursive graphlet-unification search for subgraph matches.

Query graphlets are visited in a given order.  Before each visit the bindings
found so far are substituted into the graphlet, turning bound query vertices
into data-vertex constants; the resulting pattern is then unified against the
data graphlets, and each valid extension is explored recursively.

Matching is non-induced: a solution is an injective map from query vertices
to data vertices under which every query edge lands on a data edge.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field, fields
from typing import Literal, Union

from .errors import InvalidOrderingError, InvalidQueryError
from .graph import Graph, Graphlet, graphlet_of, to_graphlets
from .hubcover import covers

Mode = Literal["strict", "lax"]
MODES: tuple[Mode, ...] = ("strict", "lax")

Binding = dict[str, str]
FrozenBinding = frozenset[tuple[str, str]]


@dataclass(frozen=True, order=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, order=True)
class Const:
    name: str

    def __str__(self) -> str:
        return self.name


Term = Union[Var, Const]


class UnsatisfiablePattern(Exception):
    """Substitution produced a repeated constant; the pattern has no injective match."""


@dataclass(frozen=True)
class PatternGraphlet:
    hub: Term
    neighbors: frozenset[Term]
    boundaries: frozenset[frozenset[Term]]

    @classmethod
    def from_graphlet(cls, gl: Graphlet) -> PatternGraphlet:
        return cls(
            Var(gl.hub),
            frozenset(Var(n) for n in gl.neighbors),
            frozenset(frozenset(Var(v) for v in b) for b in gl.boundaries),
        )

    def terms(self) -> frozenset[Term]:
        return self.neighbors | {self.hub}

    def variables(self) -> list[str]:
        return sorted(t.name for t in self.terms() if isinstance(t, Var))

    def constants(self) -> frozenset[str]:
        return frozenset(t.name for t in self.terms() if isinstance(t, Const))

    @property
    def is_ground(self) -> bool:
        return not any(isinstance(t, Var) for t in self.terms())

    def __str__(self) -> str:
        ns = ", ".join(map(str, sorted(self.neighbors, key=_term_key)))
        bs = ", ".join(
            "{%s, %s}" % tuple(map(str, sorted(b, key=_term_key)))
            for b in sorted(self.boundaries, key=lambda b: sorted(map(_term_key, b)))
        )
        return f"<{self.hub}, {{{ns}}}, {{{bs}}}>"


def _term_key(t: Term) -> tuple[int, str]:
    return (isinstance(t, Var), t.name)


@dataclass
class SearchStats:
    unify_calls: int = 0
    partial_generated: int = 0
    valid_partial: int = 0
    recursive_calls: int = 0
    solutions_found: int = 0

    def __add__(self, other: SearchStats) -> SearchStats:
        return SearchStats(
            *(getattr(self, f.name) + getattr(other, f.name) for f in fields(self))
        )

    def as_dict(self) -> dict[str, int]:
        return {
            "unifyCalls": self.unify_calls,
            "partialGenerated": self.partial_generated,
            "validPartial": self.valid_partial,
            "recursiveCalls": self.recursive_calls,
            "solutionsFound": self.solutions_found,
        }


COUNTERS = ("unifyCalls", "partialGenerated", "validPartial", "recursiveCalls")


@dataclass(frozen=True)
class UnifyOutcome:
    kind: Literal["no_match", "ground", "partial"]
    bindings: tuple[Binding, ...] = ()


@dataclass
class SearchResult:
    solutions: list[Binding]
    stats: SearchStats
    matched: bool
    trace: set[FrozenBinding] | None = None
    warnings: list[str] = field(default_factory=list)


def freeze(b: Mapping[str, str]) -> FrozenBinding:
    return frozenset(b.items())


def canonical(solutions: Iterable[Mapping[str, str]]) -> list[Binding]:
    return [dict(items) for items in sorted({tuple(sorted(s.items())) for s in solutions})]


def substitute(q: PatternGraphlet, current: Mapping[str, str]) -> PatternGraphlet:
    """Replace every bound variable of ``q`` by its data vertex."""

    def sub(t: Term) -> Term:
        if isinstance(t, Var) and t.name in current:
            return Const(current[t.name])
        return t

    hub = sub(q.hub)
    neighbors = [sub(t) for t in q.neighbors]
    new_neighbors = frozenset(neighbors)
    if len(new_neighbors) != len(neighbors) or hub in new_neighbors:
        raise UnsatisfiablePattern(f"substituting into {q} repeats a data vertex")
    boundaries = frozenset(frozenset(sub(t) for t in b) for b in q.boundaries)
    return PatternGraphlet(hub, new_neighbors, boundaries)


def _as_index(data_graphlets) -> Mapping[str, Graphlet]:
    if isinstance(data_graphlets, Mapping):
        return data_graphlets
    return {gl.hub: gl for gl in data_graphlets}


def _const_boundaries(q: PatternGraphlet) -> list[frozenset[str]]:
    return [
        frozenset(t.name for t in b)
        for b in q.boundaries
        if all(isinstance(t, Const) for t in b)
    ]


def candidate_filter(data_graphlets, q: PatternGraphlet) -> list[Graphlet]:
    """Data graphlets passing the size thresholds and the constants of ``q``."""
    index = _as_index(data_graphlets)
    if isinstance(q.hub, Const):
        pool = [index[q.hub.name]] if q.hub.name in index else []
    else:
        pool = [index[h] for h in sorted(index)]
    const_ns = {t.name for t in q.neighbors if isinstance(t, Const)}
    const_bs = _const_boundaries(q)
    n_ns, n_bs = len(q.neighbors), len(q.boundaries)
    return [
        gd
        for gd in pool
        if n_ns <= len(gd.neighbors)
        and n_bs <= len(gd.boundaries)
        and const_ns <= gd.neighbors
        and all(b in gd.boundaries for b in const_bs)
    ]


def unify_one(gd: Graphlet, q: PatternGraphlet, mode: Mode = "strict") -> list[Binding]:
    """Every assignment of the variables of ``q`` that embeds it into ``gd``."""
    if mode not in MODES:
        raise ValueError(f"unknown unification mode {mode!r}")
    sigma: Binding = {}
    if isinstance(q.hub, Var):
        sigma[q.hub.name] = gd.hub
    elif q.hub.name != gd.hub:
        return []
    consts = q.constants()
    if not {t.name for t in q.neighbors if isinstance(t, Const)} <= gd.neighbors:
        return []
    if not all(b in gd.boundaries for b in _const_boundaries(q)):
        return []
    if mode == "strict" and sigma and gd.hub in consts:
        return []

    var_ns = sorted(t.name for t in q.neighbors if isinstance(t, Var))
    position = {v: i for i, v in enumerate(var_ns)}
    # boundary checks fire once the later-assigned endpoint is bound
    checks: list[list[Term]] = [[] for _ in var_ns]
    for b in q.boundaries:
        s, t = sorted(b, key=lambda x: position.get(x.name, -1) if isinstance(x, Var) else -1)
        if isinstance(t, Var):
            checks[position[t.name]].append(s)

    values = sorted(gd.neighbors - consts) if mode == "strict" else sorted(gd.neighbors)
    out: list[Binding] = []
    used: set[str] = set(sigma.values())

    def value_of(t: Term) -> str:
        return t.name if isinstance(t, Const) else sigma[t.name]

    def extend(i: int) -> None:
        if i == len(var_ns):
            out.append(dict(sigma))
            return
        var = var_ns[i]
        for val in values:
            if val in used:
                continue
            if any(frozenset((val, value_of(o))) not in gd.boundaries for o in checks[i]):
                continue
            sigma[var] = val
            used.add(val)
            extend(i + 1)
            used.discard(val)
            del sigma[var]

    extend(0)
    return out


def unify(data_graphlets, q: PatternGraphlet, mode: Mode = "strict") -> UnifyOutcome:
    candidates = candidate_filter(data_graphlets, q)
    if q.is_ground:
        return UnifyOutcome("ground") if candidates else UnifyOutcome("no_match")
    found = [b for gd in candidates for b in unify_one(gd, q, mode)]
    if not found:
        return UnifyOutcome("no_match")
    return UnifyOutcome("partial", tuple(found))


def is_valid(p: Mapping[str, str], current: Mapping[str, str]) -> bool:
    return _valid(p, current, set(current.values()))


def _valid(p: Mapping[str, str], current: Mapping[str, str], taken: set[str]) -> bool:
    return current.keys().isdisjoint(p) and taken.isdisjoint(p.values())


def is_inner_ordering(inner: Sequence[str], outer: Sequence[str]) -> bool:
    it = iter(outer)
    return all(v in it for v in inner)


def check_query(query: Graph) -> None:
    isolated = query.isolated_vertices()
    if isolated:
        raise InvalidQueryError(f"query has isolated vertices: {isolated}")


def check_ordering(query: Graph, ordering: Sequence[str], require_cover: bool = True) -> None:
    if len(set(ordering)) != len(ordering):
        raise InvalidOrderingError(f"ordering {tuple(ordering)} repeats a vertex")
    unknown = sorted(set(ordering) - query.vertices)
    if unknown:
        raise InvalidOrderingError(f"ordering names non-query vertices {unknown}")
    if require_cover and not covers(query, ordering):
        raise InvalidOrderingError(
            f"ordering {tuple(ordering)} is not a hub cover of the query"
        )


def find_solutions(
    data: Graph,
    query: Graph,
    ordering: Sequence[str],
    mode: Mode = "strict",
    trace: bool = False,
    require_cover: bool = True,
    data_graphlets: Mapping[str, Graphlet] | None = None,
    cache: dict | None = None,
) -> SearchResult:
    """Run the recursive search from ``(ordering, depth 0, empty binding)``.

    A branch whose graphlet fails to unify, or whose every extension fails,
    is *undefined*; an undefined top level yields ``matched=False`` and no
    solutions.

    Unification outcomes are memoized on the bound values of each query
    graphlet; counters still record every logical call.  Runs over the same
    ``(data, query)`` pair may share ``data_graphlets`` and ``cache`` to skip
    repeated work, e.g. when benchmarking many orderings.
    """
    if mode not in MODES:
        raise ValueError(f"unknown unification mode {mode!r}")
    check_query(query)
    ordering = tuple(ordering)
    check_ordering(query, ordering, require_cover)
    warnings: list[str] = []
    if not require_cover and not covers(query, ordering):
        warnings.append("ordering is not a hub cover; solutions may be partial")

    index = data_graphlets if data_graphlets is not None else to_graphlets(data)
    patterns = [PatternGraphlet.from_graphlet(graphlet_of(query, v)) for v in ordering]
    scopes = [sorted(t.name for t in p.terms()) for p in patterns]
    memo = cache if cache is not None else {}
    stats = SearchStats()
    states: set[FrozenBinding] | None = {frozenset()} if trace else None

    def search(i: int, current: Binding) -> list[Binding] | None:
        stats.recursive_calls += 1
        if i == len(patterns):
            stats.solutions_found += 1
            return [current]
        key = (ordering[i], mode, tuple(current.get(v) for v in scopes[i]))
        outcome = memo.get(key)
        if outcome is None:
            try:
                outcome = unify(index, substitute(patterns[i], current), mode)
            except UnsatisfiablePattern:
                outcome = None
            memo[key] = outcome or False
        if outcome is False:
            return None
        stats.unify_calls += 1
        if outcome.kind == "no_match":
            return None
        if outcome.kind == "ground":
            return search(i + 1, current)
        stats.partial_generated += len(outcome.bindings)
        found: list[Binding] = []
        taken = set(current.values())
        for p in outcome.bindings:
            if not _valid(p, current, taken):
                continue
            stats.valid_partial += 1
            nxt = {**current, **p}
            if states is not None:
                states.add(freeze(nxt))
            r = search(i + 1, nxt)
            if r is not None:
                found.extend(r)
        return found or None

    result = search(0, {})
    solutions = canonical(result or [])
    assert len(solutions) == len(result or []), "duplicate solutions emitted"
    return SearchResult(solutions, stats, result is not None, states, warnings)
