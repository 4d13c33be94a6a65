import enum
import typing

import pydantic

from chromapoly.types.report import VerificationReport


class GraphMetadata(pydantic.BaseModel):
    name: typing.Text | None = None
    vertices: int
    edges: int
    components: int


class ClaimOutcome(enum.StrEnum):
    MATCHES_CLAIM = "matches_claim"
    MATCHES_PRINTED_COEFFICIENTS = "matches_printed_coefficients"
    UNEXPLAINED = "unexplained"


class ClaimCheck(pydantic.BaseModel):
    t: int
    value: typing.Text
    source: typing.Text
    matches: bool


class ClaimVerdict(pydantic.BaseModel):
    """Which published figure the computed count at `t` agrees with."""

    t: int
    computed: typing.Text
    outcome: ClaimOutcome
    matched_source: typing.Text | None = None


class CoefficientMismatch(pydantic.BaseModel):
    power: int
    expected: typing.Text
    actual: typing.Text


class ReferenceComparison(pydantic.BaseModel):
    """Computed polynomial against the printed coefficient vector."""

    coefficients_match: bool
    mismatches: typing.List[CoefficientMismatch] = pydantic.Field(
        default_factory=list
    )
    printed_evaluations: typing.Dict[typing.Text, typing.Text] = pydantic.Field(
        default_factory=dict, description="Horner evaluation of the printed vector"
    )


class TraceSummary(pydantic.BaseModel):
    counts: typing.Dict[typing.Text, int]
    nodes: int
    memo_hits: int
    memo_misses: int
    max_depth: int


class Timing(pydantic.BaseModel):
    seconds: float


class OutputDocument(pydantic.BaseModel):
    graph: GraphMetadata
    strategy: typing.Text
    polynomial: typing.List[typing.Text] = pydantic.Field(
        description="Coefficients as decimal strings, descending powers"
    )
    text: typing.Text
    evaluations: typing.Dict[typing.Text, typing.Text] = pydantic.Field(
        default_factory=dict
    )
    report: VerificationReport | None = None
    trace: TraceSummary | None = None
    paper_claims: typing.List[ClaimCheck] = pydantic.Field(default_factory=list)
    claim_verdicts: typing.List[ClaimVerdict] = pydantic.Field(default_factory=list)
    reference: ReferenceComparison | None = None
    timing: Timing
