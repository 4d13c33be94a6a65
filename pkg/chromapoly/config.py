import logging
import os
import pathlib
import typing

import diskcache
import pydantic
from pydantic_settings import BaseSettings

from chromapoly.utils.dummy_cache import DummyCache

logger = logging.getLogger(__name__)


class Settings(BaseSettings):
    # Environment
    ENVIRONMENT: typing.Literal["development", "production", "test"] = pydantic.Field(
        default="development",
    )
    LOG_LEVEL: typing.Literal["DEBUG", "INFO", "WARNING", "ERROR"] = pydantic.Field(
        default="INFO"
    )

    # Engine
    CHROMAPOLY_THREADS: int = pydantic.Field(
        default=0,
        ge=0,
        description="Workers for independent sub-problems, 0 means auto",
    )
    MEMO_CAPACITY: int = pydantic.Field(default=2**22, ge=0)
    NODE_BUDGET: int | None = pydantic.Field(default=None, ge=1)
    TIME_BUDGET: float | None = pydantic.Field(
        default=None, gt=0, description="Seconds"
    )

    # Persistent polynomial store
    CACHE_PATH: pathlib.Path | None = pydantic.Field(default=None)

    # Private
    _cache: diskcache.Cache | DummyCache | None = pydantic.PrivateAttr(default=None)

    @property
    def worker_count(self) -> int:
        if self.CHROMAPOLY_THREADS == 0:
            return os.cpu_count() or 1
        return self.CHROMAPOLY_THREADS

    @property
    def cache(self) -> diskcache.Cache | DummyCache:
        if self._cache is not None:
            return self._cache

        if self.CACHE_PATH is None:
            logger.debug("No CACHE_PATH configured, persistent store disabled")
            self._cache = DummyCache()
            return self._cache

        _cache_path = self.CACHE_PATH.expanduser().resolve()
        logger.info(f"Initializing DiskCache: {_cache_path}")
        self._cache = diskcache.Cache(_cache_path)
        return self._cache

    @property
    def log_level(self) -> int:
        return logging.getLevelName(self.LOG_LEVEL)
