"""
Ground truth at small scale, written independently of the engine: no
canonical forms, no closed forms, no memo.
"""

import logging
import math
import typing

from chromapoly.exceptions import InstanceTooLargeError
from chromapoly.types.graph import Graph
from chromapoly.types.polynomial import Polynomial, falling_factorial

logger = logging.getLogger(__name__)

BRUTE_FORCE_MAX_LOG2: typing.Final[float] = 30.0
NAIVE_MAX_EDGES: typing.Final[int] = 25
PARTITION_MAX_VERTICES: typing.Final[int] = 16

_T = Polynomial.t()
_T_MINUS_1 = Polynomial.linear(1)


def brute_force_count(g: Graph, t: int) -> int:
    """Number of proper colourings with `t` colours, by backtracking."""
    if t < 0:
        raise ValueError("Number of colours must be non-negative")
    n = g.n
    if n == 0:
        return 1
    if t == 0:
        return 0
    if n * math.log2(t) > BRUTE_FORCE_MAX_LOG2:
        raise InstanceTooLargeError(
            f"{t}^{n} colourings exceed the enumeration bound of "
            + f"2^{BRUTE_FORCE_MAX_LOG2:g}"
        )

    # Visit vertices so each one sees as many coloured neighbours as possible.
    order: typing.List[int] = []
    placed: typing.Set[int] = set()
    while len(order) < n:
        v = max(
            (v for v in range(n) if v not in placed),
            key=lambda v: (len(g.neighbors(v) & placed), g.degree(v), -v),
        )
        order.append(v)
        placed.add(v)
    earlier = [
        [u for u in g.neighbors(v) if order.index(u) < i] for i, v in enumerate(order)
    ]

    colours = [-1] * n

    def count(i: int) -> int:
        if i == n:
            return 1
        v = order[i]
        used = {colours[u] for u in earlier[i]}
        total = 0
        for c in range(t):
            if c in used:
                continue
            colours[v] = c
            total += count(i + 1)
        colours[v] = -1
        return total

    return count(0)


def _peel(
    adjacency: typing.Dict[int, int],
) -> typing.Tuple[typing.Dict[int, int], int, int]:
    """Strip isolated (factor t) and pendant (factor t-1) vertices."""
    adjacency = dict(adjacency)
    isolated = pendant = 0
    changed = True
    while changed:
        changed = False
        for v in list(adjacency):
            if v not in adjacency:
                continue
            mask = adjacency[v]
            if mask == 0:
                del adjacency[v]
                isolated += 1
                changed = True
            elif mask & (mask - 1) == 0:
                u = mask.bit_length() - 1
                adjacency[u] &= ~(1 << v)
                del adjacency[v]
                pendant += 1
                changed = True
    return adjacency, isolated, pendant


def _naive(adjacency: typing.Dict[int, int]) -> Polynomial:
    adjacency, isolated, pendant = _peel(adjacency)
    factor = _T**isolated * _T_MINUS_1**pendant
    if not adjacency:
        return factor

    v = min(adjacency, key=lambda v: (bin(adjacency[v]).count("1"), v))
    mask = adjacency[v]
    u = (mask & -mask).bit_length() - 1

    deleted = dict(adjacency)
    deleted[v] &= ~(1 << u)
    deleted[u] &= ~(1 << v)

    contracted = dict(adjacency)
    merged = (adjacency[u] | adjacency[v]) & ~((1 << u) | (1 << v))
    del contracted[v]
    contracted[u] = merged
    w_mask = adjacency[v] & ~(1 << u)
    while w_mask:
        w = (w_mask & -w_mask).bit_length() - 1
        w_mask &= w_mask - 1
        contracted[w] = (contracted[w] & ~(1 << v)) | (1 << u)

    return factor * (_naive(deleted) - _naive(contracted))


def naive_chromatic(g: Graph) -> Polynomial:
    """Plain deletion-contraction down to edgeless graphs."""
    if g.number_of_edges > NAIVE_MAX_EDGES:
        raise InstanceTooLargeError(
            f"{g.number_of_edges} edges exceed the deletion-contraction oracle "
            + f"limit of {NAIVE_MAX_EDGES}"
        )
    adjacency = {v: sum(1 << u for u in g.neighbors(v)) for v in range(g.n)}
    return _naive(adjacency)


def partition_chromatic(g: Graph) -> Polynomial:
    """
    Sum over k of (partitions of V into k independent sets) times
    t(t-1)...(t-k+1), by dynamic programming over vertex subsets.
    """
    n = g.n
    if n > PARTITION_MAX_VERTICES:
        raise InstanceTooLargeError(
            f"{n} vertices exceed the partition oracle limit of "
            + f"{PARTITION_MAX_VERTICES}"
        )
    if n == 0:
        return Polynomial.one()

    adjacency = [sum(1 << u for u in g.neighbors(v)) for v in range(n)]
    size = 1 << n

    independent = [False] * size
    independent[0] = True
    for mask in range(1, size):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        independent[mask] = independent[rest] and not adjacency[low] & rest

    # partitions[S][k]: ways to split S into k independent blocks
    partitions: typing.List[typing.List[int]] = [[] for _ in range(size)]
    partitions[0] = [1]
    for mask in range(1, size):
        low_bit = mask & -mask
        low = low_bit.bit_length() - 1
        free = mask & ~low_bit & ~adjacency[low]
        counts = [0] * (bin(mask).count("1") + 1)
        sub = free
        while True:
            if independent[sub]:
                for k, ways in enumerate(partitions[mask & ~(sub | low_bit)]):
                    if ways:
                        counts[k + 1] += ways
            if sub == 0:
                break
            sub = (sub - 1) & free
        partitions[mask] = counts

    result = Polynomial.zero()
    for k, ways in enumerate(partitions[size - 1]):
        if ways:
            result = result + ways * falling_factorial(k)
    return result
