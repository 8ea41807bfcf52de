"""Exit criteria for the package, one test per criterion.

Each test records a PASS/FAIL line that is printed in the pytest terminal
summary.  Run standalone with ``python tests/test_acceptance.py``.
"""

import random
import sys
from contextlib import contextmanager
from itertools import product

import pytest

from conftest import ACCEPTANCE_LINES
from graphlet_match import motivating
from graphlet_match.bench import run_bench
from graphlet_match.graph import (
    from_graphlets,
    graphlet_of,
    metrics,
    parse_edge_list,
    parse_graphlet_xml,
    to_edge_list,
    to_graphlet_xml,
    to_graphlets,
)
from graphlet_match.hubcover import enumerate_minimum_hub_covers
from graphlet_match.matcher import COUNTERS, MODES, find_solutions
from graphlet_match.oracle import brute_force_match
from graphlet_match.ordering import enumerate_mhc_orderings
from graphlet_match.pipeline import match_auto
from helpers import as_set, assert_well_formed, erdos_renyi, random_instance

SAMPLE = {"1": "m", "2": "l", "3": "k", "4": "a", "5": "c", "6": "j", "7": "d", "8": "e"}
EXAMPLE = {"1": "l", "2": "m", "3": "k", "4": "a", "5": "c", "6": "j", "7": "d", "8": "e"}
SYMMETRIC_PAIRS = [
    (("3", "5", "8"), ("3", "8", "5")),
    (("1", "6", "7"), ("2", "6", "7")),
    (("6", "7", "1"), ("6", "7", "2")),
    (("6", "1", "7"), ("6", "2", "7")),
    (("1", "7", "6"), ("2", "7", "6")),
    (("7", "1", "6"), ("7", "2", "6")),
]


@contextmanager
def criterion(label: str):
    try:
        yield
    except BaseException:
        ACCEPTANCE_LINES.append(f"FAIL  {label}")
        raise
    ACCEPTANCE_LINES.append(f"PASS  {label}")


def note(text: str) -> None:
    ACCEPTANCE_LINES.append(f"NOTE  {text}")


@pytest.fixture(scope="module")
def mhc_orderings(query):
    return enumerate_mhc_orderings(enumerate_minimum_hub_covers(query))


@pytest.fixture(scope="module")
def instances():
    rng = random.Random(20240601)
    return [random_instance(rng) for _ in range(200)]


def test_c01_solution_count(data, query, mhc_orderings):
    with criterion("C1  24 solutions for all 24 MHC orderings and both full orderings"):
        assert len(mhc_orderings) == 24
        for o in [*mhc_orderings, motivating.BEST_FULL_ORDERING, motivating.WORST_FULL_ORDERING]:
            r = find_solutions(data, query, o)
            assert_well_formed(r.solutions, data, query)
            assert len(r.solutions) == 24, o


def test_c02_known_solutions(data, query):
    with criterion("C2  both reference solutions present"):
        got = as_set(find_solutions(data, query, ("3", "6", "7")).solutions)
        assert frozenset(SAMPLE.items()) in got
        assert frozenset(EXAMPLE.items()) in got


def test_c03_minimum_hub_covers(query):
    with criterion("C3  minimum hub covers are {1,6,7} {2,6,7} {3,6,7} {3,5,8}"):
        found = {c.members for c in enumerate_minimum_hub_covers(query)}
        assert found == set(motivating.MINIMUM_HUB_COVERS)


def test_c04_metrics_table(query):
    with criterion("C4  metrics equal the reference table on 1,2,3,4,6,7; 5 and 8 are (0,2)"):
        computed = {v: metrics(graphlet_of(query, v)).as_tuple() for v in query.vertices}
        for v in "123467":
            assert computed[v] == motivating.REFERENCE_METRICS[v]
        assert computed["5"] == computed["8"] == (0, 2)
        mismatched = sorted(v for v in computed if computed[v] != motivating.REFERENCE_METRICS[v])
        assert mismatched == ["5"]
    note(f"C4  expected deviation: reference row 5 = {motivating.REFERENCE_METRICS['5']}, "
         f"computed {computed['5']} (5<->8 automorphism forces equality with row 8)")


def test_c05_explored_count_calibration(data, query, mhc_orderings):
    table = {
        (mode, o): find_solutions(data, query, o, mode=mode).stats.as_dict()
        for mode, o in product(MODES, mhc_orderings)
    }
    with criterion("C5a symmetric ordering pairs have equal counters (all counters, both modes)"):
        for mode, (a, b) in product(MODES, SYMMETRIC_PAIRS):
            assert table[mode, a] == table[mode, b], (mode, a, b)
    with criterion("C5b (3,5,8) attains the minimum under at least one counter/mode"):
        winners = [
            (mode, c)
            for mode, c in product(MODES, COUNTERS)
            if table[mode, ("3", "5", "8")][c] == min(table[mode, o][c] for o in mhc_orderings)
        ]
        assert winners
    note(f"C5b minimal for (3,5,8) under: {', '.join(f'{c}/{m}' for m, c in winners)}")
    reproduced = [
        (mode, c)
        for mode, c in product(MODES, COUNTERS)
        if all(table[mode, o][c] == v for o, v in motivating.REFERENCE_EXPLORED.items())
    ]
    if reproduced:
        note("C5c reference explored column reproduced exactly by: "
             + ", ".join(f"{c}/{m}" for m, c in reproduced))
    else:
        note("C5c no counter/mode reproduces the reference explored column")
    best = find_solutions(data, query, motivating.BEST_FULL_ORDERING).stats.recursive_calls
    worst = find_solutions(data, query, motivating.WORST_FULL_ORDERING).stats.recursive_calls
    note(f"C5c full orderings under recursiveCalls: best {best} (reference 309), "
         f"worst {worst} (reference 8815)")


def test_c06_oracle_equivalence(instances):
    with criterion("C6  matcher (auto ordering) == brute force on 200 random instances"):
        for data, query in instances:
            expected = as_set(brute_force_match(data, query))
            got = match_auto(data, query).result.solutions
            assert_well_formed(got, data, query)
            assert as_set(got) == expected


def test_c07_ordering_invariance():
    rng = random.Random(77)
    with criterion("C7  all MHC orderings and 20 random full permutations agree on 50 instances"):
        for _ in range(50):
            data, query = random_instance(rng)
            index, cache = to_graphlets(data), {}
            orderings = enumerate_mhc_orderings(enumerate_minimum_hub_covers(query))
            vs = sorted(query.vertices)
            orderings += [tuple(rng.sample(vs, len(vs))) for _ in range(20)]
            results = set()
            for o in orderings:
                sols = find_solutions(data, query, o, data_graphlets=index, cache=cache).solutions
                assert_well_formed(sols, data, query)
                results.add(frozenset(as_set(sols)))
            assert len(results) == 1


def test_c08_mode_equivalence(data, query, mhc_orderings, instances):
    with criterion("C8  strict and lax agree; lax partialGenerated >= strict"):
        cases = [(data, query, o) for o in mhc_orderings]
        cases += [(d, q, match_auto(d, q).choice.ordering) for d, q in instances]
        for d, q, o in cases:
            strict = find_solutions(d, q, o, mode="strict")
            lax = find_solutions(d, q, o, mode="lax")
            assert_well_formed(lax.solutions, d, q)
            assert strict.solutions == lax.solutions
            assert lax.stats.partial_generated >= strict.stats.partial_generated


def test_c09_round_trips(data, query):
    rng = random.Random(9)
    graphs = [data, query] + [erdos_renyi(rng, rng.randint(0, 12), rng.uniform(0, 0.6)) for _ in range(50)]
    with criterion("C9  edge list <-> XML and graphlet reassembly are identities"):
        assert motivating.data_graph_xml() == data and motivating.query_graph_xml() == query
        for g in graphs:
            xml = to_graphlet_xml(g)
            assert parse_graphlet_xml(xml) == g
            assert parse_edge_list(to_edge_list(parse_graphlet_xml(xml))) == g
            assert to_graphlet_xml(parse_edge_list(to_edge_list(g))) == xml
            assert from_graphlets(to_graphlets(g).values()) == g


def test_c10_well_formedness(data, query):
    # every other criterion asserts this inline; here it is checked on the bench rows too
    with criterion("C10 every emitted binding is total, injective and edge-preserving"):
        rows = run_bench(data, query, motivating.REFERENCE_EXPLORED)
        assert {r.solutions for r in rows} == {24}
        for o in motivating.REFERENCE_EXPLORED:
            assert_well_formed(find_solutions(data, query, o, mode="lax").solutions, data, query)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
