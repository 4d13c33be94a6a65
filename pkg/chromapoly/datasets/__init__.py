import functools
import logging
import pathlib
import typing
from types import MappingProxyType

import yaml

from chromapoly.exceptions import UnknownDatasetError
from chromapoly.types.dataset import Dataset, DatasetDefinition
from chromapoly.types.graph import Graph

from .edge_list import parse_edge_list, serialize_edge_list

logger = logging.getLogger(__name__)

DATA_DIR: typing.Final[pathlib.Path] = pathlib.Path(__file__).parent.joinpath("data")

_datasets_definitions_raw = yaml.safe_load(
    pathlib.Path(__file__).parent.joinpath("datasets.yml").read_text()
)
DATASETS_DEFINITIONS: typing.Final[
    MappingProxyType[typing.Text, DatasetDefinition]
] = MappingProxyType(
    {
        entry["name"]: DatasetDefinition.model_validate(entry)
        for entry in _datasets_definitions_raw["datasets"]
    }
)


def list_datasets() -> typing.List[DatasetDefinition]:
    return list(DATASETS_DEFINITIONS.values())


@functools.lru_cache(maxsize=None)
def _graph(name: typing.Text) -> Graph:
    definition = DATASETS_DEFINITIONS[name]
    if definition.file is not None:
        return parse_edge_list(DATA_DIR.joinpath(definition.file).read_text())

    assert definition.extends is not None
    base = _graph(definition.extends)
    labels = list(base.labels or ()) + list(definition.isolated)
    return Graph(
        base.n + len(definition.isolated),
        [(e.u, e.v) for e in base.sorted_edges()],
        labels=labels,
    )


def dataset(name: typing.Text) -> Dataset:
    definition = DATASETS_DEFINITIONS.get(name)
    if definition is None:
        raise UnknownDatasetError(
            f"Unknown dataset '{name}', available: "
            + ", ".join(DATASETS_DEFINITIONS)
        )
    return Dataset(
        name=definition.name,
        description=definition.description,
        graph=_graph(name),
        expected=definition.expected,
    )


__all__ = [
    "DATASETS_DEFINITIONS",
    "dataset",
    "list_datasets",
    "parse_edge_list",
    "serialize_edge_list",
]
