import pytest

from chromapoly.closed_forms import chrom_complete, chrom_cycle, chrom_wheel
from chromapoly.exceptions import InstanceTooLargeError
from chromapoly.graph.families import complete, cycle, path, wheel
from chromapoly.types.graph import Graph
from chromapoly.types.polynomial import Polynomial
from chromapoly.verifier import (
    brute_force_count,
    naive_chromatic,
    partition_chromatic,
)
from tests.helpers import random_graphs

T = Polynomial.t()
DIAMOND = Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def test_brute_force_count():
    assert brute_force_count(complete(3), 3) == 6
    assert brute_force_count(complete(3), 2) == 0
    assert brute_force_count(wheel(6), 4) == 120
    assert brute_force_count(cycle(4), 0) == 0
    assert brute_force_count(Graph(0), 0) == 1
    assert brute_force_count(Graph(3), 2) == 8

    with pytest.raises(ValueError):
        brute_force_count(path(2), -1)
    with pytest.raises(InstanceTooLargeError):
        brute_force_count(Graph(31), 2)


def test_naive_chromatic():
    assert naive_chromatic(Graph(0)) == 1
    assert naive_chromatic(Graph(2)) == T**2
    assert naive_chromatic(path(4)) == T * (T - 1) ** 3
    assert naive_chromatic(cycle(5)) == chrom_cycle(5)
    assert naive_chromatic(DIAMOND) == T * (T - 1) * (T - 2) ** 2
    assert naive_chromatic(complete(4)) == chrom_complete(4)
    assert naive_chromatic(wheel(7)) == chrom_wheel(7)

    with pytest.raises(InstanceTooLargeError):
        naive_chromatic(complete(8))


def test_partition_chromatic():
    assert partition_chromatic(Graph(0)) == 1
    assert partition_chromatic(Graph(3)) == T**3
    assert partition_chromatic(DIAMOND) == T * (T - 1) * (T - 2) ** 2
    assert partition_chromatic(complete(9)) == chrom_complete(9)

    with pytest.raises(InstanceTooLargeError):
        partition_chromatic(Graph(17))


def test_oracles_agree():
    for g in random_graphs(500, min_n=1, max_n=7, seed=9):
        naive = naive_chromatic(g)
        assert partition_chromatic(g) == naive, repr(g)
        for t in (2, 3):
            assert brute_force_count(g, t) == naive.eval(t), repr(g)
