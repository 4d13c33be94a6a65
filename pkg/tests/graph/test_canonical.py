import collections
import itertools
import typing

import networkx as nx
import pytest

from chromapoly.graph import canonical_form, canonical_labeling, is_isomorphic
from chromapoly.graph.families import complete, cycle, interlocking, wheel
from chromapoly.types.graph import Graph
from tests.helpers import random_graphs, shuffled


def test_empty_graph():
    assert canonical_form(Graph(0)) == canonical_form(Graph(0))
    assert canonical_form(Graph(0)) != canonical_form(Graph(1))


@pytest.mark.parametrize(
    "g", [cycle(7), wheel(8), complete(5), interlocking(5, 6), Graph(4, [(0, 1)])]
)
def test_invariant_under_relabeling(g: Graph):
    key = canonical_form(g)
    for seed in range(5):
        assert canonical_form(shuffled(g, seed)) == key


def test_labeling_is_a_permutation():
    g = interlocking(6, 7)
    labeling = canonical_labeling(g)
    assert sorted(labeling) == list(range(g.n))


def test_labels_do_not_matter():
    g = Graph(3, [(0, 1), (1, 2)], labels=["x", "y", "z"])
    assert canonical_form(g) == canonical_form(g.without_labels())


def test_agrees_with_networkx():
    graphs = random_graphs(40, min_n=5, max_n=7, seed=11)
    for g, h in itertools.combinations(graphs, 2):
        if g.n != h.n:
            continue
        expected = nx.is_isomorphic(g.to_networkx(), h.to_networkx())
        assert (canonical_form(g) == canonical_form(h)) == expected
        assert is_isomorphic(g, h) == expected


def test_regular_non_isomorphic_pair():
    # Two 3-regular graphs on 6 vertices: K_{3,3} and the triangular prism.
    k33 = Graph(6, [(a, b) for a in range(3) for b in range(3, 6)])
    prism = Graph(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    )
    assert not is_isomorphic(k33, prism)
    assert is_isomorphic(prism, shuffled(prism, 3))


def test_random_relabelings_keep_the_key():
    for i, g in enumerate(random_graphs(1000, min_n=1, max_n=9, seed=51)):
        assert canonical_form(shuffled(g, seed=i)) == canonical_form(g), repr(g)


def test_keys_match_isomorphism_classes():
    # Same degree sequence is where isomorphic and non-isomorphic pairs mix.
    groups: typing.DefaultDict[typing.Tuple, typing.List[Graph]] = (
        collections.defaultdict(list)
    )
    for g in random_graphs(400, min_n=4, max_n=7, seed=52):
        groups[(g.n, tuple(sorted(g.degrees())))].append(g)

    for group in groups.values():
        for g, h in itertools.combinations(group[:12], 2):
            expected = nx.is_isomorphic(g.to_networkx(), h.to_networkx())
            assert (canonical_form(g) == canonical_form(h)) == expected
