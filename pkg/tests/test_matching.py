import random

from conftest import random_graph
from ramseylb import graph
from ramseylb.matching import matching_edges, matching_number, maximum_matching
from ramseylb.oracle import oracle_matching_number


def test_small_cases():
    assert matching_number(graph.empty(5)) == 0
    assert matching_number(graph.path(2)) == 1
    assert matching_number(graph.complete(7)) == 3
    assert matching_number(graph.cycle(9)) == 4
    assert matching_number(graph.matching_graph(4)) == 4
    assert matching_number(graph.complete_multipartite([3, 5])) == 3


def test_blossom_case():
    # two triangles joined by a bridge: needs blossom handling
    g = graph.Graph.from_edges(
        6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]
    )
    assert matching_number(g) == 3


def test_petersen():
    g = graph.circulant(10, {2})  # two 5-cycles
    assert matching_number(g) == 4


def test_matching_edges_are_disjoint():
    rng = random.Random(5)
    for _ in range(50):
        g = random_graph(rng.randrange(1, 13), 0.4, rng)
        pairs = matching_edges(g)
        used = [v for e in pairs for v in e]
        assert len(set(used)) == len(used)
        assert all(g.has_edge(a, b) for a, b in pairs)
        assert len(pairs) == matching_number(g)


def test_against_oracle():
    rng = random.Random(11)
    for _ in range(150):
        g = random_graph(rng.randrange(0, 13), rng.choice([0.2, 0.5, 0.8]), rng)
        assert matching_number(g) == oracle_matching_number(g)


def test_maximum_matching_array():
    g = graph.path(4)
    match = maximum_matching(g)
    assert sum(1 for v in match if v >= 0) == 4
    for v, u in enumerate(match):
        if u >= 0:
            assert match[u] == v and g.has_edge(u, v)
