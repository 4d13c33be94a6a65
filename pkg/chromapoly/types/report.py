import enum
import typing

import pydantic


class CheckStatus(enum.StrEnum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not_applicable"


class CheckName(enum.StrEnum):
    DEGREE = "degree"
    MONIC = "monic"
    EDGE_COEFFICIENT = "edge_coefficient"
    CONSTANT_TERM = "constant_term"
    ALTERNATING_SIGNS = "alternating_signs"
    LOWEST_POWER = "lowest_power"
    COEFFICIENT_SUM = "coefficient_sum"


class CheckResult(pydantic.BaseModel):
    name: CheckName
    status: CheckStatus
    description: typing.Text
    expected: typing.Text | None = None
    actual: typing.Text | None = None
    witness: int | None = pydantic.Field(
        default=None, description="Power of the offending coefficient"
    )


class VerificationReport(pydantic.BaseModel):
    vertices: int
    edges: int
    components: int
    checks: typing.List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.status != CheckStatus.FAIL for c in self.checks)

    def failures(self) -> typing.List[CheckResult]:
        return [c for c in self.checks if c.status == CheckStatus.FAIL]

    def check(self, name: CheckName) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def status_of(self, name: CheckName) -> CheckStatus:
        return self.check(name).status
