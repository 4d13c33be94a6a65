"""Structure discovery: connected components and clique separators."""

import logging
import typing

import networkx as nx

from chromapoly.types.graph import Graph
from chromapoly.types.separator import SeparatorInfo

logger = logging.getLogger(__name__)

DEFAULT_MAX_CLIQUE_SIZE: typing.Final[int] = 3


class Component(typing.NamedTuple):
    graph: Graph
    vertices: typing.List[int]  # component vertex i is vertices[i] in the source


def connected_components(g: Graph) -> typing.List[Component]:
    """Components ordered by their smallest vertex id."""
    parts = sorted(
        (sorted(c) for c in nx.connected_components(g.to_networkx())),
        key=lambda c: c[0],
    )
    return [Component(*g.induced_subgraph(part)) for part in parts]


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return nx.is_connected(g.to_networkx())


def _cliques_of_size(g: Graph, size: int) -> typing.List[typing.Tuple[int, ...]]:
    """All cliques with `size` vertices as ascending tuples, in lexicographic order."""
    cliques: typing.List[typing.Tuple[int, ...]] = [()]
    for _ in range(size):
        grown: typing.List[typing.Tuple[int, ...]] = []
        for clique in cliques:
            start = clique[-1] + 1 if clique else 0
            for v in range(start, g.n):
                if all(v in g.neighbors(u) for u in clique):
                    grown.append(clique + (v,))
        cliques = grown
    return cliques


def _separating_cliques(
    g: Graph, nxg: nx.Graph, size: int
) -> typing.Set[typing.Tuple[int, ...]]:
    # A clique S + {w} separates when w is a cut vertex of G - S.
    found: typing.Set[typing.Tuple[int, ...]] = set()
    for base in _cliques_of_size(g, size - 1):
        rest = nxg.subgraph(v for v in range(g.n) if v not in base)
        for w in nx.articulation_points(rest):
            if all(w in g.neighbors(u) for u in base):
                found.add(tuple(sorted(base + (w,))))
    return found


def _sides(
    g: Graph, nxg: nx.Graph, clique: typing.Tuple[int, ...]
) -> typing.Tuple[typing.Tuple[int, ...], ...]:
    removed = set(clique)
    rest = nxg.subgraph(v for v in range(g.n) if v not in removed)
    parts = sorted(
        (tuple(sorted(c)) for c in nx.connected_components(rest)),
        key=lambda c: c[0],
    )
    return tuple(parts)


def find_clique_separator(
    g: Graph, max_clique_size: int = DEFAULT_MAX_CLIQUE_SIZE
) -> SeparatorInfo | None:
    """
    Smallest separating clique of size <= `max_clique_size`, or None.

    Among separators of the smallest size the most balanced one is returned
    (smallest largest side, then the lexicographically smallest clique).
    """
    if max_clique_size < 1:
        raise ValueError("max_clique_size must be at least 1")
    if g.n < 3:
        return None

    nxg = g.to_networkx()
    for size in range(1, max_clique_size + 1):
        if size > g.n - 2:
            break
        candidates = _separating_cliques(g, nxg, size)
        if not candidates:
            continue

        best: typing.Tuple[int, typing.Tuple[int, ...]] | None = None
        best_sides: typing.Tuple[typing.Tuple[int, ...], ...] = ()
        for clique in sorted(candidates):
            sides = _sides(g, nxg, clique)
            if len(sides) < 2:
                continue
            score = (max(len(s) for s in sides), clique)
            if best is None or score < best:
                best, best_sides = score, sides

        if best is not None:
            logger.debug(
                f"Clique separator of size {size} at {best[1]} "
                + f"with sides {[len(s) for s in best_sides]}"
            )
            return SeparatorInfo(clique=best[1], sides=best_sides)

    return None
