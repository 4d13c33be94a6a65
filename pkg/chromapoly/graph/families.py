"""Constructors for the standard graph families."""

import logging
import typing

from chromapoly.exceptions import FamilyParameterError
from chromapoly.types.family import FAMILY_MINIMUM, Family, FamilyMatch
from chromapoly.types.graph import Graph

logger = logging.getLogger(__name__)


class InterlockingLayout(typing.NamedTuple):
    hub_m: int
    hub_n: int
    rim_m: typing.List[int]  # rim cycle of W_m, in order
    rim_n: typing.List[int]  # rim cycle of W_n, in order


def _check(family: Family, *values: int) -> None:
    minimum = FAMILY_MINIMUM[family]
    for value in values:
        if value < minimum:
            raise FamilyParameterError(
                f"{family.value} requires parameters >= {minimum}, got {values}"
            )


def path(n: int) -> Graph:
    _check(Family.PATH, n)
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _check(Family.CYCLE, n)
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _check(Family.COMPLETE, n)
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def edgeless(n: int) -> Graph:
    _check(Family.EDGELESS, n)
    return Graph(n)


def _wheel_edges(
    hub: int, rim: typing.Sequence[int]
) -> typing.List[typing.Tuple[int, int]]:
    spokes = [(hub, r) for r in rim]
    rim_edges = [(rim[i], rim[(i + 1) % len(rim)]) for i in range(len(rim))]
    return spokes + rim_edges


def wheel(n: int) -> Graph:
    """Hub 0 joined to the rim cycle 1..n-1."""
    _check(Family.WHEEL, n)
    return Graph(n, _wheel_edges(0, list(range(1, n))))


def broken_wheel(n: int) -> Graph:
    """W_n without its rim edge {n-1, 1}: hub 0 over the rim path 1..n-1."""
    _check(Family.BROKEN_WHEEL, n)
    spokes = [(0, r) for r in range(1, n)]
    rim_path = [(r, r + 1) for r in range(1, n - 1)]
    return Graph(n, spokes + rim_path)


def interlocking_layout(m: int, n: int) -> InterlockingLayout:
    """
    Vertex layout of W_m ∧₂ W_n: hubs 0 (of W_m) and 1 (of W_n), shared rim
    vertices a=2 and b=3, then the m-4 private rim vertices of W_m and the
    n-4 private rim vertices of W_n.
    """
    hub_m, hub_n, a, b = 0, 1, 2, 3
    private_m = list(range(4, m))
    private_n = list(range(m, m + n - 4))
    return InterlockingLayout(
        hub_m=hub_m,
        hub_n=hub_n,
        rim_m=[a, hub_n, b] + private_m,
        rim_n=[a, hub_m, b] + private_n,
    )


def interlocking(m: int, n: int) -> Graph:
    """
    Two wheels overlapping in the double wedge {h_m, h_n, a, b} (K_4 minus ab):
    each hub lies on the other's rim, between a and b.
    """
    _check(Family.INTERLOCKING, m, n)
    if m + n < 9:
        raise FamilyParameterError(
            "interlocking wheels need m + n >= 9: for W_4 ∧₂ W_4 both rims force "
            + "a-b adjacent and the union collapses to K_4"
        )
    layout = interlocking_layout(m, n)
    edges = {
        (min(e), max(e))
        for e in _wheel_edges(layout.hub_m, layout.rim_m)
        + _wheel_edges(layout.hub_n, layout.rim_n)
    }
    return Graph(m + n - 4, sorted(edges))


def build_family(match: FamilyMatch) -> Graph:
    family = match.family
    params = match.parameters
    if family == Family.EDGELESS:
        return edgeless(params[0])
    if family == Family.PATH:
        return path(params[0])
    if family == Family.CYCLE:
        return cycle(params[0])
    if family == Family.COMPLETE:
        return complete(params[0])
    if family == Family.WHEEL:
        return wheel(params[0])
    if family == Family.BROKEN_WHEEL:
        return broken_wheel(params[0])
    if family == Family.INTERLOCKING:
        return interlocking(params[0], params[1])
    raise FamilyParameterError(
        f"Family {family.value} has no single construction for parameters {params}"
    )
