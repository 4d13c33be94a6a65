import typing

import pydantic

from chromapoly.types.graph import Graph


class PublishedClaim(pydantic.BaseModel):
    """A value printed for the dataset, kept even when it disagrees with others."""

    model_config = pydantic.ConfigDict(frozen=True)

    t: int = pydantic.Field(ge=0)
    value: typing.Text
    source: typing.Text


class ExpectedMetadata(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True)

    vertices: int | None = None
    edges: int | None = None
    components: int | None = None
    degree: int | None = None
    chromatic_number: int | None = None
    evaluations: typing.Dict[int, typing.Text] = pydantic.Field(default_factory=dict)
    coefficients: typing.Tuple[typing.Text, ...] | None = pydantic.Field(
        default=None, description="Descending powers, decimal strings"
    )
    factored: typing.Text | None = None
    claims: typing.Tuple[PublishedClaim, ...] = ()
    provenance: typing.Dict[typing.Text, typing.Text] = pydantic.Field(
        default_factory=dict
    )


class DatasetDefinition(pydantic.BaseModel):
    """One entry of the packaged `datasets.yml`."""

    model_config = pydantic.ConfigDict(frozen=True)

    name: typing.Text
    description: typing.Text
    file: typing.Text | None = None
    extends: typing.Text | None = None
    isolated: typing.Tuple[typing.Text, ...] = ()
    expected: ExpectedMetadata | None = None

    @pydantic.model_validator(mode="after")
    def _check_source(self) -> "DatasetDefinition":
        if (self.file is None) == (self.extends is None):
            raise ValueError(
                f"Dataset '{self.name}' needs exactly one of 'file' or 'extends'"
            )
        return self


class Dataset(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: typing.Text
    description: typing.Text
    graph: Graph
    expected: ExpectedMetadata | None = None
