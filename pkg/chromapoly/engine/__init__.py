from ._engine import (
    ChromaticEngine,
    ChromaticResult,
    chromatic,
    crt1_combine,
    select_branch_edge,
)
from .memo import MemoCache
from .settings import BranchHeuristic, EngineConfig, EngineStrategy
from .trace import replay, summarize

__all__ = [
    "BranchHeuristic",
    "ChromaticEngine",
    "ChromaticResult",
    "EngineConfig",
    "EngineStrategy",
    "MemoCache",
    "chromatic",
    "crt1_combine",
    "replay",
    "select_branch_edge",
    "summarize",
]
