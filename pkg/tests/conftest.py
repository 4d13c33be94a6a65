import logging
import os
import typing

import pytest
from logging_bullet_train import set_logger

if typing.TYPE_CHECKING:
    from chromapoly.config import Settings
    from chromapoly.engine import ChromaticEngine

set_logger("chromapoly")
set_logger("tests")

logger = logging.getLogger(__name__)


@pytest.fixture(autouse=True)
def set_env_vars():
    os.environ["ENVIRONMENT"] = "test"


@pytest.fixture(scope="module")
def deps_settings():
    from chromapoly.config import Settings

    settings = Settings()  # type: ignore
    assert settings.ENVIRONMENT == "test", "Settings must be in test environment"

    return settings


@pytest.fixture(scope="module")
def deps_engine(deps_settings: "Settings") -> "ChromaticEngine":
    from chromapoly.engine import ChromaticEngine, EngineConfig

    # Single-threaded, traced, and without the persistent store.
    return ChromaticEngine(
        EngineConfig.from_settings(deps_settings, threads=1, trace_enabled=True)
    )


@pytest.fixture(scope="module")
def deps_fast_engine(deps_settings: "Settings") -> "ChromaticEngine":
    from chromapoly.engine import ChromaticEngine, EngineConfig

    return ChromaticEngine(
        EngineConfig.from_settings(deps_settings, threads=1, trace_enabled=False)
    )
