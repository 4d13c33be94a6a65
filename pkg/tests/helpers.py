import random
import typing

import networkx as nx

from chromapoly.types.graph import Graph


def random_graph(n: int, p: float, seed: int) -> Graph:
    return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def random_graphs(
    count: int,
    *,
    min_n: int = 1,
    max_n: int = 8,
    connected: bool = False,
    seed: int = 0,
) -> typing.List[Graph]:
    rng = random.Random(seed)
    graphs: typing.List[Graph] = []
    while len(graphs) < count:
        n = rng.randint(min_n, max_n)
        p = rng.uniform(0.2, 0.7)
        nxg = nx.gnp_random_graph(n, p, seed=rng.randrange(2**32))
        if connected and not nx.is_connected(nxg):
            continue
        graphs.append(Graph.from_networkx(nxg))
    return graphs


def random_tree(n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph(n, [(v, rng.randrange(v)) for v in range(1, n)])


def shuffled(g: Graph, seed: int) -> Graph:
    permutation = list(range(g.n))
    random.Random(seed).shuffle(permutation)
    return g.relabel(permutation)
