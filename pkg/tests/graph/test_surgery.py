import random

import networkx as nx
import pytest

from chromapoly.exceptions import EdgeNotPresentError, GraphValidationError
from chromapoly.graph import (
    canonical_form,
    contract_edge,
    delete_edge,
    glue_on_clique,
    is_isomorphic,
)
from chromapoly.graph.families import complete, cycle, path
from chromapoly.types.graph import Edge, Graph
from tests.helpers import random_graphs


def test_delete_edge():
    g = delete_edge(cycle(4), (3, 0))
    assert g == path(4)
    with pytest.raises(EdgeNotPresentError):
        delete_edge(path(3), (0, 2))
    with pytest.raises(EdgeNotPresentError):
        delete_edge(path(3), (1, 1))


def test_contract_merges_parallel_edges():
    g = contract_edge(complete(3), (0, 1))
    assert g == complete(2)
    assert contract_edge(cycle(5), (1, 2)) == cycle(4)


def test_contract_ids_and_labels():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)], labels=["a", "b", "c", "d"])
    h = contract_edge(g, (2, 1))
    assert h.n == 3
    assert h.labels == ("a", "b/c", "d")
    assert h.sorted_edges() == [Edge(0, 1), Edge(1, 2)]


def test_glue_on_clique():
    diamond = glue_on_clique(complete(3), [1, 2], complete(3), [0, 1])
    assert diamond.n == 4
    assert diamond.number_of_edges == 5
    assert is_isomorphic(diamond, delete_edge(complete(4), (0, 3)))

    # Gluing on K_1 is a one-point union.
    bowtie = glue_on_clique(complete(3), [0], complete(3), [2])
    assert bowtie.n == 5
    assert bowtie.degree(0) == 4


def test_glue_errors():
    with pytest.raises(GraphValidationError):
        glue_on_clique(complete(3), [0, 1], complete(3), [0])
    with pytest.raises(GraphValidationError):
        glue_on_clique(path(3), [0, 2], complete(3), [0, 1])
    with pytest.raises(GraphValidationError):
        glue_on_clique(complete(3), [0, 0], complete(3), [0, 1])


def test_contracted_label_never_clashes():
    g = Graph(3, [(0, 1), (1, 2)], labels=["a", "b", "a/b"])
    h = contract_edge(g, (0, 1))
    assert h.labels == ("a/b'", "a/b")

    again = contract_edge(Graph(3, [(0, 1)], labels=["a", "b", "a/b'"]), (0, 1))
    assert again.labels == ("a/b", "a/b'")


def test_contraction_is_simple_on_random_graphs():
    for g in random_graphs(200, min_n=2, max_n=9, seed=31):
        for edge in g.sorted_edges():
            h = contract_edge(g, edge)
            shared = g.neighbors(edge.u) & g.neighbors(edge.v)
            assert h.n == g.n - 1
            assert h.number_of_edges == g.number_of_edges - 1 - len(shared)
            for v, nbrs in enumerate(h.adjacency):
                assert v not in nbrs
                assert all(v in h.adjacency[u] for u in nbrs)

            expected = nx.contracted_nodes(
                g.to_networkx(), edge.u, edge.v, self_loops=False
            )
            assert is_isomorphic(h, Graph.from_networkx(expected))


def test_delete_then_restore_edge():
    rng = random.Random(32)
    for g in random_graphs(200, min_n=2, max_n=9, connected=True, seed=33):
        edge = rng.choice(g.sorted_edges())
        deleted = delete_edge(g, edge)
        assert not deleted.has_edge(*edge)
        restored = deleted.with_edge(*edge)
        assert restored == g
        assert canonical_form(restored) == canonical_form(g)
