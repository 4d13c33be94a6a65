"""Delete and contract surgeries, plus gluing two graphs along a clique."""

import logging
import typing

from chromapoly.exceptions import EdgeNotPresentError, GraphValidationError
from chromapoly.types.graph import Edge, Graph

logger = logging.getLogger(__name__)


def _require_edge(g: Graph, e: typing.Tuple[int, int]) -> Edge:
    a, b = e
    if a == b or not g.has_edge(a, b):
        raise EdgeNotPresentError((a, b))
    return Edge.of(a, b)


def delete_edge(g: Graph, e: typing.Tuple[int, int]) -> Graph:
    edge = _require_edge(g, e)
    adjacency = [set(nbrs) for nbrs in g.adjacency]
    adjacency[edge.u].discard(edge.v)
    adjacency[edge.v].discard(edge.u)
    return Graph._trusted(adjacency, g.labels)


def contract_edge(g: Graph, e: typing.Tuple[int, int]) -> Graph:
    """
    Identify the endpoints of `e`, merging parallel edges.

    The merged vertex keeps the smaller id and is labelled "a/b", primed
    until unique; ids above the larger endpoint shift down by one.
    """
    edge = _require_edge(g, e)
    keep, gone = edge.u, edge.v

    def new_id(w: int) -> int:
        if w == gone:
            return keep
        return w if w < gone else w - 1

    adjacency: typing.List[typing.Set[int]] = []
    for w, nbrs in enumerate(g.adjacency):
        if w == gone:
            continue
        if w == keep:
            merged = (nbrs | g.adjacency[gone]) - {keep, gone}
            adjacency.append({new_id(x) for x in merged})
        else:
            adjacency.append({new_id(x) for x in nbrs})

    labels = None
    if g.labels is not None:
        labels = [label for w, label in enumerate(g.labels) if w != gone]
        merged_label = f"{g.labels[keep]}/{g.labels[gone]}"
        while merged_label in labels:
            merged_label += "'"
        labels[keep] = merged_label
    return Graph._trusted(adjacency, labels)


def glue_on_clique(
    g1: Graph,
    clique1: typing.Sequence[int],
    g2: Graph,
    clique2: typing.Sequence[int],
) -> Graph:
    """
    Overlap of `g1` and `g2` in K_l: `clique1[i]` is identified with
    `clique2[i]`. Vertices of `g1` keep their ids; the remaining vertices of
    `g2` follow in ascending order.
    """
    if len(clique1) != len(clique2):
        raise GraphValidationError("Clique sizes differ")
    if len(set(clique1)) != len(clique1) or len(set(clique2)) != len(clique2):
        raise GraphValidationError("Clique vertices must be distinct")
    if not g1.is_clique(clique1) or not g2.is_clique(clique2):
        raise GraphValidationError("Glue vertices must form a clique in both graphs")

    mapping: typing.Dict[int, int] = dict(zip(clique2, clique1))
    next_id = g1.n
    for v in range(g2.n):
        if v not in mapping:
            mapping[v] = next_id
            next_id += 1

    adjacency: typing.List[typing.Set[int]] = [set(nbrs) for nbrs in g1.adjacency]
    adjacency.extend(set() for _ in range(next_id - g1.n))
    for edge in g2.edges:
        a, b = mapping[edge.u], mapping[edge.v]
        adjacency[a].add(b)
        adjacency[b].add(a)
    return Graph._trusted(adjacency)
