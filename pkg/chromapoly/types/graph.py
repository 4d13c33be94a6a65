import logging
import typing

import networkx as nx

from chromapoly.exceptions import GraphValidationError

logger = logging.getLogger(__name__)


class Edge(typing.NamedTuple):
    """Unordered vertex pair, stored with `u < v`."""

    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        if a == b:
            raise GraphValidationError(f"Self-loop on vertex {a} is not allowed")
        return cls(a, b) if a < b else cls(b, a)


class Graph:
    """
    Finite simple undirected graph on the dense vertex ids 0..n-1.

    Values are immutable: every operation returns a new graph. Optional labels
    are unique human-readable vertex names.
    """

    __slots__ = ("_n", "_adjacency", "_edges", "_labels", "_label_index")

    def __init__(
        self,
        n: int,
        edges: typing.Iterable[typing.Tuple[int, int]] = (),
        labels: typing.Sequence[typing.Text] | None = None,
    ):
        if n < 0:
            raise GraphValidationError("Vertex count must be non-negative")

        adjacency: typing.List[typing.Set[int]] = [set() for _ in range(n)]
        edge_set: typing.Set[Edge] = set()
        for a, b in edges:
            edge = Edge.of(a, b)
            if not (0 <= edge.u and edge.v < n):
                raise GraphValidationError(
                    f"Edge {{{a},{b}}} has an endpoint outside 0..{n - 1}"
                )
            if edge in edge_set:
                raise GraphValidationError(f"Duplicate edge {{{a},{b}}}")
            edge_set.add(edge)
            adjacency[edge.u].add(edge.v)
            adjacency[edge.v].add(edge.u)

        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise GraphValidationError(
                    f"Expected {n} labels, got {len(labels)}"
                )
            if len(set(labels)) != n:
                raise GraphValidationError("Vertex labels must be unique")

        self._n = n
        self._adjacency = tuple(frozenset(s) for s in adjacency)
        self._edges = frozenset(edge_set)
        self._labels: typing.Tuple[typing.Text, ...] | None = labels
        self._label_index: typing.Dict[typing.Text, int] | None = None

    @classmethod
    def _trusted(
        cls,
        adjacency: typing.Sequence[typing.AbstractSet[int]],
        labels: typing.Sequence[typing.Text] | None = None,
    ) -> "Graph":
        """Build from an adjacency list already known to be simple."""
        g = cls.__new__(cls)
        g._n = len(adjacency)
        g._adjacency = tuple(frozenset(s) for s in adjacency)
        g._edges = frozenset(
            Edge(u, v) for u, nbrs in enumerate(g._adjacency) for v in nbrs if u < v
        )
        g._labels = tuple(labels) if labels is not None else None
        g._label_index = None
        return g

    @classmethod
    def from_networkx(cls, nxg: nx.Graph) -> "Graph":
        nodes = sorted(nxg.nodes)
        index = {node: i for i, node in enumerate(nodes)}
        return cls(len(nodes), ((index[a], index[b]) for a, b in nxg.edges))

    # Accessors
    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> typing.FrozenSet[Edge]:
        return self._edges

    @property
    def adjacency(self) -> typing.Tuple[typing.FrozenSet[int], ...]:
        return self._adjacency

    @property
    def labels(self) -> typing.Tuple[typing.Text, ...] | None:
        return self._labels

    @property
    def number_of_edges(self) -> int:
        return len(self._edges)

    def sorted_edges(self) -> typing.List[Edge]:
        return sorted(self._edges)

    def neighbors(self, vertex: int) -> typing.FrozenSet[int]:
        return self._adjacency[vertex]

    def degree(self, vertex: int) -> int:
        return len(self._adjacency[vertex])

    def degrees(self) -> typing.List[int]:
        return [len(nbrs) for nbrs in self._adjacency]

    def has_edge(self, a: int, b: int) -> bool:
        return 0 <= a < self._n and b in self._adjacency[a]

    def label_of(self, vertex: int) -> typing.Text | None:
        return self._labels[vertex] if self._labels is not None else None

    def name_of(self, vertex: int) -> typing.Text:
        label = self.label_of(vertex)
        return label if label is not None else str(vertex)

    def index_of(self, label: typing.Text) -> int:
        if self._labels is None:
            raise KeyError(f"Graph has no labels (looked up {label!r})")
        if self._label_index is None:
            self._label_index = {name: i for i, name in enumerate(self._labels)}
        return self._label_index[label]

    def is_clique(self, vertices: typing.Iterable[int]) -> bool:
        vs = list(vertices)
        return all(
            vs[j] in self._adjacency[vs[i]]
            for i in range(len(vs))
            for j in range(i + 1, len(vs))
        )

    # Derived graphs
    def with_edge(self, a: int, b: int) -> "Graph":
        edge = Edge.of(a, b)
        if edge in self._edges:
            raise GraphValidationError(f"Edge {{{a},{b}}} already present")
        adjacency = [set(s) for s in self._adjacency]
        adjacency[edge.u].add(edge.v)
        adjacency[edge.v].add(edge.u)
        return Graph._trusted(adjacency, self._labels)

    def without_labels(self) -> "Graph":
        if self._labels is None:
            return self
        return Graph._trusted(self._adjacency)

    def induced_subgraph(
        self, vertices: typing.Iterable[int]
    ) -> typing.Tuple["Graph", typing.List[int]]:
        """Subgraph on `vertices` (renumbered by ascending id) and the map back."""
        mapping = sorted(set(vertices))
        index = {v: i for i, v in enumerate(mapping)}
        adjacency = [
            {index[u] for u in self._adjacency[v] if u in index} for v in mapping
        ]
        labels = (
            [self._labels[v] for v in mapping] if self._labels is not None else None
        )
        return Graph._trusted(adjacency, labels), mapping

    def relabel(self, permutation: typing.Sequence[int]) -> "Graph":
        """Graph with vertex `v` moved to `permutation[v]`."""
        if sorted(permutation) != list(range(self._n)):
            raise GraphValidationError("Not a permutation of the vertex ids")
        adjacency: typing.List[typing.Set[int]] = [set() for _ in range(self._n)]
        for v, nbrs in enumerate(self._adjacency):
            adjacency[permutation[v]] = {permutation[u] for u in nbrs}
        labels = None
        if self._labels is not None:
            _labels: typing.List[typing.Text] = [""] * self._n
            for v, label in enumerate(self._labels):
                _labels[permutation[v]] = label
            labels = _labels
        return Graph._trusted(adjacency, labels)

    def to_networkx(self) -> nx.Graph:
        nxg = nx.Graph()
        nxg.add_nodes_from(range(self._n))
        nxg.add_edges_from(self._edges)
        return nxg

    # Value semantics: labels are presentation only
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={len(self._edges)})"
