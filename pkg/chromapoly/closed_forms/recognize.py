"""
Family recognition. Cheap invariants (n, |E|, degree multiset) pick a single
candidate construction, which is then confirmed by canonical form.
"""

import logging
import typing

from chromapoly.graph.canonical import is_isomorphic
from chromapoly.graph.families import build_family
from chromapoly.graph.structure import is_connected
from chromapoly.types.family import Family, FamilyMatch
from chromapoly.types.graph import Graph

logger = logging.getLogger(__name__)


def _confirmed(g: Graph, match: FamilyMatch) -> FamilyMatch | None:
    return match if is_isomorphic(g, build_family(match)) else None


def _interlocking(g: Graph, degrees: typing.List[int]) -> FamilyMatch | None:
    n = g.n
    total = n + 4
    for m in range(4, total // 2 + 1):
        k = total - m
        if k < 4 or m + k < 9:
            continue
        match = FamilyMatch(family=Family.INTERLOCKING, parameters=(m, k))
        candidate = build_family(match)
        if sorted(candidate.degrees()) != degrees:
            continue
        if is_isomorphic(g, candidate):
            return match
    return None


def recognize(g: Graph) -> FamilyMatch | None:
    """Family of a connected graph, or None. Complete graphs take precedence."""
    n, edges = g.n, g.number_of_edges
    if n == 0:
        return FamilyMatch(family=Family.EDGELESS, parameters=(0,))
    if edges == 0:
        return FamilyMatch(family=Family.COMPLETE, parameters=(1,)) if n == 1 else None

    degrees = sorted(g.degrees())

    if edges == n * (n - 1) // 2:
        return _confirmed(g, FamilyMatch(family=Family.COMPLETE, parameters=(n,)))

    if edges == n - 1:
        if not is_connected(g):
            return None
        if degrees[-1] <= 2:
            return _confirmed(g, FamilyMatch(family=Family.PATH, parameters=(n,)))
        return FamilyMatch(family=Family.TREE, parameters=(n,))

    if edges == n and degrees[0] == 2 and degrees[-1] == 2:
        return _confirmed(g, FamilyMatch(family=Family.CYCLE, parameters=(n,)))

    if n >= 4 and degrees[-1] == n - 1:
        if edges == 2 * (n - 1) and degrees[:-1] == [3] * (n - 1):
            return _confirmed(g, FamilyMatch(family=Family.WHEEL, parameters=(n,)))
        if edges == 2 * n - 3:
            return _confirmed(
                g, FamilyMatch(family=Family.BROKEN_WHEEL, parameters=(n,))
            )

    if n >= 5 and edges == 2 * n - 1:
        return _interlocking(g, degrees)

    return None
