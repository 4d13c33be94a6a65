import typing

import pydantic

if typing.TYPE_CHECKING:
    from chromapoly.types.graph import Graph


class SeparatorInfo(pydantic.BaseModel):
    """A graph split as an overlap of its pieces in the complete graph `clique`."""

    model_config = pydantic.ConfigDict(frozen=True)

    clique: typing.Tuple[int, ...]
    sides: typing.Tuple[typing.Tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.clique)

    def piece_vertices(self) -> typing.List[typing.Tuple[int, ...]]:
        return [tuple(sorted(self.clique + side)) for side in self.sides]

    def pieces(
        self, g: "Graph"
    ) -> typing.List[typing.Tuple["Graph", typing.List[int]]]:
        """Induced pieces clique ∪ side_i, each with its map back into `g`."""
        return [g.induced_subgraph(vs) for vs in self.piece_vertices()]
