"""Random instance generators and solution checks shared by the tests."""

import random
from itertools import combinations

from graphlet_match.graph import Graph


def erdos_renyi(rng: random.Random, n: int, p: float, prefix: str = "d") -> Graph:
    vs = [f"{prefix}{i}" for i in range(n)]
    es = [(u, v) for u, v in combinations(vs, 2) if rng.random() < p]
    return Graph.from_edges(es, vs)


def random_connected(rng: random.Random, n: int, p: float = 0.4, prefix: str = "q") -> Graph:
    """Random spanning tree plus extra edges with probability ``p``."""
    vs = [f"{prefix}{i}" for i in range(n)]
    es = {frozenset((vs[i], vs[rng.randrange(i)])) for i in range(1, n)}
    es |= {frozenset(pair) for pair in combinations(vs, 2) if rng.random() < p}
    return Graph.from_edges([tuple(e) for e in es], vs)


def random_instance(rng: random.Random) -> tuple[Graph, Graph]:
    data = erdos_renyi(rng, rng.randint(6, 12), rng.uniform(0.25, 0.5))
    query = random_connected(rng, rng.randint(3, 5))
    return data, query


def as_set(solutions) -> set[frozenset]:
    return {frozenset(s.items()) for s in solutions}


def assert_well_formed(solutions, data: Graph, query: Graph) -> None:
    for s in solutions:
        assert set(s) == set(query.vertices), f"not total: {s}"
        assert len(set(s.values())) == len(s), f"not injective: {s}"
        for u, v in query.sorted_edges():
            assert data.has_edge(s[u], s[v]), f"edge {u}-{v} not preserved by {s}"
