import random

import pytest

from chromapoly.engine import (
    ChromaticEngine,
    EngineConfig,
    EngineStrategy,
    crt1_combine,
)
from chromapoly.graph.surgery import contract_edge, delete_edge, glue_on_clique
from chromapoly.types.graph import Graph
from chromapoly.verifier import brute_force_count, verify_structure
from tests.helpers import random_graphs, shuffled


def _with_clique(g: Graph, size: int) -> Graph:
    for a in range(size):
        for b in range(a + 1, size):
            if not g.has_edge(a, b):
                g = g.with_edge(a, b)
    return g


def test_deletion_contraction_identity(deps_fast_engine: ChromaticEngine):
    rng = random.Random(7)
    for g in random_graphs(500, min_n=2, max_n=9, connected=True, seed=1):
        edge = rng.choice(g.sorted_edges())
        whole = deps_fast_engine.chromatic(g).polynomial
        deleted = deps_fast_engine.chromatic(delete_edge(g, edge)).polynomial
        contracted = deps_fast_engine.chromatic(contract_edge(g, edge)).polynomial
        assert whole == deleted - contracted, f"{g!r} on {edge}"


@pytest.mark.parametrize("size", [1, 2, 3])
def test_clique_gluing_identity(deps_fast_engine: ChromaticEngine, size: int):
    left = random_graphs(50, min_n=size + 1, max_n=7, seed=10 + size)
    right = random_graphs(50, min_n=size + 1, max_n=7, seed=20 + size)
    for g1, g2 in zip(left, right):
        g1, g2 = _with_clique(g1, size), _with_clique(g2, size)
        clique = list(range(size))
        glued = glue_on_clique(g1, clique, g2, clique)

        expected = crt1_combine(
            [
                deps_fast_engine.chromatic(g1).polynomial,
                deps_fast_engine.chromatic(g2).polynomial,
            ],
            size,
        )
        assert deps_fast_engine.chromatic(glued).polynomial == expected


def test_strategies_agree():
    auto = ChromaticEngine(EngineConfig(trace_enabled=False))
    memo_only = ChromaticEngine(
        EngineConfig(strategy=EngineStrategy.MEMO_ONLY, trace_enabled=False)
    )
    naive = ChromaticEngine(
        EngineConfig(strategy=EngineStrategy.NAIVE, trace_enabled=False)
    )

    for g in random_graphs(500, min_n=1, max_n=8, seed=2):
        expected = auto.chromatic(g).polynomial
        assert memo_only.chromatic(g).polynomial == expected, repr(g)
        assert naive.chromatic(g).polynomial == expected, repr(g)


def test_relabeling_invariance(deps_fast_engine: ChromaticEngine):
    for i, g in enumerate(random_graphs(50, min_n=3, max_n=9, seed=3)):
        expected = deps_fast_engine.chromatic(g).polynomial
        fresh = ChromaticEngine(EngineConfig(trace_enabled=False))
        assert fresh.chromatic(shuffled(g, seed=i)).polynomial == expected


def test_brute_force_agreement(deps_fast_engine: ChromaticEngine):
    for g in random_graphs(500, min_n=1, max_n=8, seed=4):
        p = deps_fast_engine.chromatic(g).polynomial
        for t in range(5):
            assert p.eval(t) == brute_force_count(g, t), f"{g!r} at t={t}"


def test_structure_checks_pass(deps_fast_engine: ChromaticEngine):
    for g in random_graphs(100, min_n=1, max_n=9, seed=5):
        report = verify_structure(g, deps_fast_engine.chromatic(g).polynomial)
        assert report.passed, [f.model_dump() for f in report.failures()]
