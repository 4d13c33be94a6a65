import concurrent.futures
import logging
import sys
import threading
import time
import typing

from chromapoly.closed_forms import closed_form, recognize
from chromapoly.exceptions import GraphValidationError, ResourceLimitExceededError
from chromapoly.graph.canonical import canonical_form
from chromapoly.graph.structure import connected_components, find_clique_separator
from chromapoly.graph.surgery import contract_edge, delete_edge
from chromapoly.types.canonical import CanonicalKey
from chromapoly.types.family import Family, FamilyMatch
from chromapoly.types.graph import Edge, Graph
from chromapoly.types.polynomial import Polynomial, falling_factorial
from chromapoly.types.trace import (
    CliqueSplit,
    ClosedForm,
    ComponentSplit,
    DeleteContract,
    MemoHit,
    ReductionStats,
    ReductionTrace,
    TraceFrame,
    TraceKind,
    TraceNode,
)

from .memo import MemoCache
from .settings import BranchHeuristic, EngineConfig, EngineStrategy

if typing.TYPE_CHECKING:
    import diskcache

    from chromapoly.config import Settings
    from chromapoly.utils.dummy_cache import DummyCache

logger = logging.getLogger(__name__)

Path = typing.Tuple[TraceFrame, ...]
Solved = typing.Tuple[Polynomial, TraceNode | None]

# Interpreter frames one nesting level of `_solve` occupies.
FRAMES_PER_LEVEL: typing.Final[int] = 5
RECURSION_LIMIT_CEILING: typing.Final[int] = 50_000


class ChromaticResult(typing.NamedTuple):
    polynomial: Polynomial
    trace: ReductionTrace | None  # None when tracing is disabled
    stats: ReductionStats


def select_branch_edge(
    g: Graph, heuristic: BranchHeuristic = BranchHeuristic.MAX_DEGREE_SUM
) -> Edge:
    """
    Edge to apply deletion-contraction to.

    `max_degree_sum` takes an edge whose endpoints have the largest combined
    degree, ties broken by the smallest (u, v). `min_degree` takes the edge
    from the smallest vertex of minimum positive degree to its neighbour of
    largest degree.
    """
    if g.number_of_edges == 0:
        raise GraphValidationError("Cannot branch on a graph without edges")
    degrees = g.degrees()

    if heuristic == BranchHeuristic.MIN_DEGREE:
        v = min(
            (v for v in range(g.n) if degrees[v] > 0), key=lambda v: (degrees[v], v)
        )
        u = min(g.neighbors(v), key=lambda u: (-degrees[u], u))
        return Edge.of(u, v)

    return min(g.edges, key=lambda e: (-(degrees[e.u] + degrees[e.v]), e))


def crt1_combine(parts: typing.Sequence[Polynomial], l: int) -> Polynomial:
    """
    Chromatic polynomial of pieces that pairwise overlap in the same K_l:
    ((p1 * p2) / χ(K_l)) * p3 / χ(K_l) ...
    """
    if not parts:
        raise ValueError("crt1_combine needs at least one part")
    if l < 1:
        raise ValueError("Overlap clique size must be at least 1")
    divisor = falling_factorial(l)
    result = parts[0]
    for p in parts[1:]:
        result = (result * p).exact_div(divisor)
    return result


def _stack_height() -> int:
    frame, height = sys._getframe(1), 1
    while frame.f_back is not None:
        frame, height = frame.f_back, height + 1
    return height


def _depth_limit(g: Graph, max_depth: int | None) -> int:
    """
    Deepest sub-problem nesting a run on `g` may reach.

    Raises the interpreter's recursion limit, up to a ceiling, when the
    nesting needs more frames than it allows.
    """
    # Children have fewer edges than their parent, except the components of a
    # graph with isolated vertices, which do not split again.
    wanted = max_depth if max_depth is not None else 2 * g.number_of_edges + 2
    # Headroom for the canonical-form search, which nests once per vertex.
    base = _stack_height() + 2 * g.n + 64
    required = base + FRAMES_PER_LEVEL * (wanted + 1)
    limit = sys.getrecursionlimit()
    if required > limit:
        limit = min(required, RECURSION_LIMIT_CEILING)
        logger.debug(f"Raising the recursion limit to {limit}")
        sys.setrecursionlimit(limit)
    return max(1, min(wanted, (limit - base) // FRAMES_PER_LEVEL - 1))


class _Run:
    """Per-call bookkeeping shared by every thread working on one graph."""

    def __init__(self, config: EngineConfig, max_depth: int):
        self.config = config
        self.max_depth = max_depth
        self.stats = ReductionStats()
        self.started = time.monotonic()
        self.deadline = (
            self.started + config.time_budget if config.time_budget else None
        )
        self._lock = threading.Lock()

    def enter(self, g: Graph, depth: int, path: Path) -> None:
        with self._lock:
            self.stats.nodes += 1
            if depth > self.stats.max_depth:
                self.stats.max_depth = depth
            nodes = self.stats.nodes

        budget = self.config.node_budget
        if budget is not None and nodes > budget:
            self._abort(f"Node budget of {budget} exceeded", g, depth, path)
        if self.deadline is not None and time.monotonic() > self.deadline:
            self._abort(
                f"Time budget of {self.config.time_budget}s exceeded", g, depth, path
            )
        if depth > self.max_depth:
            self._abort(f"Depth limit of {self.max_depth} exceeded", g, depth, path)

    def count(self, kind: TraceKind) -> None:
        with self._lock:
            self.stats.count(kind)

    def miss(self) -> None:
        with self._lock:
            self.stats.memo_misses += 1

    def finish(self) -> ReductionStats:
        self.stats.elapsed = time.monotonic() - self.started
        return self.stats

    def _abort(self, detail: str, g: Graph, depth: int, path: Path) -> None:
        frame = TraceFrame(depth=depth, vertices=g.n, edges=g.number_of_edges)
        stats = self.finish()
        logger.warning(f"{detail} after {stats.nodes} sub-problems, aborting")
        raise ResourceLimitExceededError(
            detail, stats=stats, partial=list(path) + [frame]
        )


class ChromaticEngine:
    """
    Computes chromatic polynomials by reduction.

    Sub-problems go through: component factorization, closed-form families,
    memo lookup by canonical key, clique-separator splitting, and finally
    deletion-contraction. The memo lives as long as the engine.
    """

    def __init__(
        self,
        config: EngineConfig | None = None,
        *,
        store: "diskcache.Cache | DummyCache | None" = None,
    ):
        self._config: typing.Final[EngineConfig] = config or EngineConfig()
        self._memo = MemoCache(self._config.memo_capacity, store=store)

    @classmethod
    def from_settings(cls, settings: "Settings", **overrides: typing.Any):
        return cls(
            EngineConfig.from_settings(settings, **overrides), store=settings.cache
        )

    @property
    def config(self) -> EngineConfig:
        return self._config

    @property
    def memo(self) -> MemoCache:
        return self._memo

    def chromatic(self, g: Graph) -> ChromaticResult:
        run = _Run(self._config, _depth_limit(g, self._config.max_depth))
        logger.debug(
            f"Computing chromatic polynomial of {g!r} "
            + f"with strategy '{self._config.strategy.value}'"
        )
        p, node = self._solve(g.without_labels(), run, 0, ())
        stats = run.finish()
        logger.info(
            f"Chromatic polynomial of degree {p.degree} in {stats.elapsed:.3f}s: "
            + f"{stats.nodes} sub-problems, {stats.delete_contracts} deletion-"
            + f"contractions, {stats.memo_hits} memo hits"
        )
        trace = ReductionTrace(root=node) if node is not None else None
        return ChromaticResult(polynomial=p, trace=trace, stats=stats)

    # Pipeline
    def _solve(self, g: Graph, run: _Run, depth: int, path: Path) -> Solved:
        run.enter(g, depth, path)

        if g.number_of_edges == 0:
            return self._leaf(
                FamilyMatch(family=Family.EDGELESS, parameters=(g.n,)), run
            )

        strategy = self._config.strategy
        if strategy == EngineStrategy.NAIVE:
            return self._delete_contract(g, run, depth, path, key=None)

        if strategy == EngineStrategy.AUTO:
            components = connected_components(g)
            if len(components) > 1:
                return self._component_split(
                    [c.graph for c in components], run, depth, path
                )
            match = recognize(g)
            if match is not None:
                return self._leaf(match, run)

        key = canonical_form(g)
        cached = self._memo.lookup(key)
        if cached is not None:
            run.count(TraceKind.MEMO_HIT)
            node = (
                MemoHit(key=key.hex(), coefficients=tuple(cached.to_descending()))
                if self._config.trace_enabled
                else None
            )
            return cached, node
        run.miss()

        if strategy == EngineStrategy.AUTO:
            separator = find_clique_separator(g, self._config.max_separator_clique)
            if separator is not None:
                if depth == 0:
                    logger.debug(
                        f"Top-level split on a K_{separator.size} into "
                        + f"{len(separator.sides)} pieces"
                    )
                pieces = [piece for piece, _ in separator.pieces(g)]
                frame = TraceFrame(
                    kind=TraceKind.CLIQUE_SPLIT,
                    depth=depth,
                    vertices=g.n,
                    edges=g.number_of_edges,
                    detail=f"clique {separator.clique}",
                )
                solved = self._map(pieces, run, depth, path + (frame,))
                p = crt1_combine([s[0] for s in solved], separator.size)
                run.count(TraceKind.CLIQUE_SPLIT)
                self._memo.store(key, p)
                node = (
                    CliqueSplit(
                        clique_size=separator.size,
                        clique=separator.clique,
                        children=tuple(s[1] for s in solved),
                    )
                    if self._config.trace_enabled
                    else None
                )
                return p, node

        return self._delete_contract(g, run, depth, path, key=key)

    def _leaf(self, match: FamilyMatch, run: _Run) -> Solved:
        run.count(TraceKind.CLOSED_FORM)
        node = (
            ClosedForm(family=match.family, parameters=match.parameters)
            if self._config.trace_enabled
            else None
        )
        return closed_form(match), node

    def _component_split(
        self, parts: typing.List[Graph], run: _Run, depth: int, path: Path
    ) -> Solved:
        if depth == 0:
            logger.debug(f"Graph has {len(parts)} components")
        frame = TraceFrame(
            kind=TraceKind.COMPONENT_SPLIT,
            depth=depth,
            vertices=sum(part.n for part in parts),
            edges=sum(part.number_of_edges for part in parts),
        )
        solved = self._map(parts, run, depth, path + (frame,))
        p = Polynomial.one()
        for q, _ in solved:
            p = p * q
        run.count(TraceKind.COMPONENT_SPLIT)
        node = (
            ComponentSplit(children=tuple(s[1] for s in solved))
            if self._config.trace_enabled
            else None
        )
        return p, node

    def _delete_contract(
        self,
        g: Graph,
        run: _Run,
        depth: int,
        path: Path,
        *,
        key: CanonicalKey | None,
    ) -> Solved:
        edge = select_branch_edge(g, self._config.branch_heuristic)
        frame = TraceFrame(
            kind=TraceKind.DELETE_CONTRACT,
            depth=depth,
            vertices=g.n,
            edges=g.number_of_edges,
            detail=f"edge {{{edge.u},{edge.v}}}",
        )
        (pd, nd), (pc, nc) = self._map(
            [delete_edge(g, edge), contract_edge(g, edge)],
            run,
            depth,
            path + (frame,),
        )
        p = pd - pc
        run.count(TraceKind.DELETE_CONTRACT)
        if key is not None:
            self._memo.store(key, p)
        node = (
            DeleteContract(edge=(edge.u, edge.v), delete_child=nd, contract_child=nc)
            if self._config.trace_enabled
            else None
        )
        return p, node

    def _map(
        self, graphs: typing.List[Graph], run: _Run, depth: int, path: Path
    ) -> typing.List[Solved]:
        # Only the children of the root run concurrently; a trace is recorded
        # single-threaded so that memo hits land on the same nodes every run.
        workers = min(self._config.threads, len(graphs))
        if depth > 0 or workers <= 1 or self._config.trace_enabled:
            return [self._solve(h, run, depth + 1, path) for h in graphs]

        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(self._solve, h, run, depth + 1, path) for h in graphs
            ]
            return [f.result() for f in futures]


def chromatic(g: Graph, config: EngineConfig | None = None) -> ChromaticResult:
    """Chromatic polynomial of `g` with a fresh engine."""
    return ChromaticEngine(config).chromatic(g)
