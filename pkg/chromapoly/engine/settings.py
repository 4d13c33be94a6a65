import enum
import logging
import typing

import pydantic

if typing.TYPE_CHECKING:
    from chromapoly.config import Settings

logger = logging.getLogger(__name__)


MEMO_CAPACITY_DEFAULT: typing.Final[int] = 2**22
MAX_SEPARATOR_CLIQUE_DEFAULT: typing.Final[int] = 3


class EngineStrategy(enum.StrEnum):
    AUTO = "auto"
    NAIVE = "naive"
    MEMO_ONLY = "memo_only"


class BranchHeuristic(enum.StrEnum):
    MAX_DEGREE_SUM = "max_degree_sum"
    MIN_DEGREE = "min_degree"


class EngineConfig(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True)

    strategy: EngineStrategy = pydantic.Field(default=EngineStrategy.AUTO)
    max_separator_clique: int = pydantic.Field(
        default=MAX_SEPARATOR_CLIQUE_DEFAULT, ge=1
    )
    memo_capacity: int = pydantic.Field(default=MEMO_CAPACITY_DEFAULT, ge=0)
    trace_enabled: bool = pydantic.Field(default=True)
    branch_heuristic: BranchHeuristic = pydantic.Field(
        default=BranchHeuristic.MAX_DEGREE_SUM
    )
    node_budget: int | None = pydantic.Field(default=None, ge=1)
    time_budget: float | None = pydantic.Field(
        default=None, gt=0, description="Seconds"
    )
    max_depth: int | None = pydantic.Field(
        default=None,
        ge=1,
        description="Deepest sub-problem nesting; unset derives it from the graph",
    )
    threads: int = pydantic.Field(
        default=1,
        ge=1,
        description="Workers for the independent children of the top-level split",
    )

    @classmethod
    def from_settings(cls, settings: "Settings", **overrides: typing.Any):
        values: typing.Dict[typing.Text, typing.Any] = {
            "memo_capacity": settings.MEMO_CAPACITY,
            "node_budget": settings.NODE_BUDGET,
            "time_budget": settings.TIME_BUDGET,
            "threads": settings.worker_count,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        _config = cls.model_validate(values)
        logger.debug(f"Engine config: {_config.model_dump_json()}")
        return _config
