import enum
import typing

import pydantic


class Family(enum.StrEnum):
    EDGELESS = "edgeless"
    PATH = "path"
    TREE = "tree"
    CYCLE = "cycle"
    COMPLETE = "complete"
    WHEEL = "wheel"
    BROKEN_WHEEL = "broken_wheel"
    INTERLOCKING = "interlocking_wheels"


# Smallest admissible parameter per family.
FAMILY_MINIMUM: typing.Final[typing.Dict[Family, int]] = {
    Family.EDGELESS: 0,
    Family.PATH: 1,
    Family.TREE: 1,
    Family.CYCLE: 3,
    Family.COMPLETE: 1,
    Family.WHEEL: 4,
    Family.BROKEN_WHEEL: 4,
    Family.INTERLOCKING: 4,
}


class FamilyMatch(pydantic.BaseModel):
    """A recognised family. Parameters are (n,), or (m, n) for interlocking wheels."""

    model_config = pydantic.ConfigDict(frozen=True)

    family: Family
    parameters: typing.Tuple[int, ...]

    @pydantic.model_validator(mode="after")
    def _check_arity(self) -> "FamilyMatch":
        expected = 2 if self.family == Family.INTERLOCKING else 1
        if len(self.parameters) != expected:
            raise ValueError(
                f"Family {self.family.value} takes {expected} parameter(s), "
                + f"got {self.parameters}"
            )
        return self

