"""
Exact canonical form by colour refinement with exhaustive individualisation.

Vertices start coloured by degree; colours are refined by the multiset of
neighbour colours until stable. While some colour class has more than one
vertex, each vertex of the smallest such class is individualised in turn and
the search recurses. Every discrete colouring yields a certificate (the sorted
edge list under that vertex order) and the smallest certificate wins. Vertices
that are twins of an already explored vertex are skipped: swapping twins is an
automorphism, so their subtrees produce the same certificates.
"""

import logging
import typing

from chromapoly.types.canonical import CanonicalKey
from chromapoly.types.graph import Graph

logger = logging.getLogger(__name__)

Colouring = typing.List[int]
Certificate = typing.Tuple[typing.Tuple[int, int], ...]


def _rank(keys: typing.Sequence[typing.Any]) -> typing.Tuple[Colouring, int]:
    ranking = {key: i for i, key in enumerate(sorted(set(keys)))}
    return [ranking[key] for key in keys], len(ranking)


def _refine(
    adjacency: typing.Sequence[typing.FrozenSet[int]], colours: Colouring
) -> Colouring:
    colours, count = _rank(colours)
    while True:
        signatures = [
            (colours[v], tuple(sorted(colours[u] for u in nbrs)))
            for v, nbrs in enumerate(adjacency)
        ]
        refined, refined_count = _rank(signatures)
        if refined_count == count:
            return refined
        colours, count = refined, refined_count


def _individualise(colours: Colouring, vertex: int) -> Colouring:
    keys = [(c, 0 if v == vertex else 1) for v, c in enumerate(colours)]
    return _rank(keys)[0]


def _certificate(g: Graph, colours: Colouring) -> Certificate:
    return tuple(
        sorted(
            (colours[e.u], colours[e.v])
            if colours[e.u] < colours[e.v]
            else (colours[e.v], colours[e.u])
            for e in g.edges
        )
    )


def _encode(n: int, certificate: Certificate) -> CanonicalKey:
    numbers = [n, len(certificate)]
    for a, b in certificate:
        numbers.append(a)
        numbers.append(b)
    return CanonicalKey(b"".join(x.to_bytes(4, "big") for x in numbers))


def canonical_labeling(g: Graph) -> Colouring:
    """Position of every vertex in the canonical order."""
    return _search(g)[1]


def _search(g: Graph) -> typing.Tuple[Certificate, Colouring]:
    n = g.n
    adjacency = g.adjacency
    open_twin = [adjacency[v] for v in range(n)]
    closed_twin = [adjacency[v] | {v} for v in range(n)]

    best: typing.List[typing.Any] = [None, None]

    def search(colours: Colouring) -> None:
        colours = _refine(adjacency, colours)
        sizes: typing.Dict[int, int] = {}
        for c in colours:
            sizes[c] = sizes.get(c, 0) + 1

        if len(sizes) == n:
            cert = _certificate(g, colours)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, colours
            return

        target = min(
            (c for c, size in sizes.items() if size > 1),
            key=lambda c: (sizes[c], c),
        )
        seen_open: typing.Set[typing.FrozenSet[int]] = set()
        seen_closed: typing.Set[typing.FrozenSet[int]] = set()
        for v in range(n):
            if colours[v] != target:
                continue
            if open_twin[v] in seen_open or closed_twin[v] in seen_closed:
                continue
            seen_open.add(open_twin[v])
            seen_closed.add(closed_twin[v])
            search(_individualise(colours, v))

    search([len(nbrs) for nbrs in adjacency])
    return best[0], best[1]


def canonical_form(g: Graph) -> CanonicalKey:
    if g.n == 0:
        return _encode(0, ())
    certificate, _ = _search(g)
    return _encode(g.n, certificate)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.number_of_edges != g2.number_of_edges:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)
