import enum
import typing

import pydantic

from chromapoly.types.family import Family


class TraceKind(enum.StrEnum):
    COMPONENT_SPLIT = "component_split"
    CLIQUE_SPLIT = "clique_split"
    DELETE_CONTRACT = "delete_contract"
    CLOSED_FORM = "closed_form"
    MEMO_HIT = "memo_hit"


class ClosedForm(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True)

    kind: typing.Literal[TraceKind.CLOSED_FORM] = TraceKind.CLOSED_FORM
    family: Family
    parameters: typing.Tuple[int, ...]


class MemoHit(pydantic.BaseModel):
    """A sub-problem answered from the memo. The polynomial travels with it."""

    model_config = pydantic.ConfigDict(frozen=True)

    kind: typing.Literal[TraceKind.MEMO_HIT] = TraceKind.MEMO_HIT
    key: typing.Text  # hex of the canonical key
    coefficients: typing.Tuple[typing.Text, ...]  # descending


class ComponentSplit(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True)

    kind: typing.Literal[TraceKind.COMPONENT_SPLIT] = TraceKind.COMPONENT_SPLIT
    children: typing.Tuple["TraceNode", ...]


class CliqueSplit(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True)

    kind: typing.Literal[TraceKind.CLIQUE_SPLIT] = TraceKind.CLIQUE_SPLIT
    clique_size: int = pydantic.Field(ge=1)
    clique: typing.Tuple[int, ...]
    children: typing.Tuple["TraceNode", ...]


class DeleteContract(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True)

    kind: typing.Literal[TraceKind.DELETE_CONTRACT] = TraceKind.DELETE_CONTRACT
    edge: typing.Tuple[int, int]
    delete_child: "TraceNode"
    contract_child: "TraceNode"


TraceNode = typing.Annotated[
    typing.Union[ClosedForm, MemoHit, ComponentSplit, CliqueSplit, DeleteContract],
    pydantic.Field(discriminator="kind"),
]

ComponentSplit.model_rebuild()
CliqueSplit.model_rebuild()
DeleteContract.model_rebuild()


def _children(node: TraceNode) -> typing.Tuple[TraceNode, ...]:
    if isinstance(node, (ComponentSplit, CliqueSplit)):
        return node.children
    if isinstance(node, DeleteContract):
        return (node.delete_child, node.contract_child)
    return ()


class ReductionTrace(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True)

    root: TraceNode

    def walk(self) -> typing.Iterator[TraceNode]:
        """Pre-order traversal."""
        stack: typing.List[TraceNode] = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(_children(node)))

    def counts(self) -> typing.Dict[TraceKind, int]:
        counts = {kind: 0 for kind in TraceKind}
        for node in self.walk():
            counts[node.kind] += 1
        return counts

    def depth(self) -> int:
        best = 0
        stack: typing.List[typing.Tuple[TraceNode, int]] = [(self.root, 1)]
        while stack:
            node, d = stack.pop()
            best = max(best, d)
            stack.extend((child, d + 1) for child in _children(node))
        return best


class ReductionStats(pydantic.BaseModel):
    nodes: int = 0
    component_splits: int = 0
    clique_splits: int = 0
    delete_contracts: int = 0
    closed_forms: int = 0
    memo_hits: int = 0
    memo_misses: int = 0
    max_depth: int = 0
    elapsed: float = 0.0  # seconds

    def count(self, kind: TraceKind) -> None:
        if kind == TraceKind.COMPONENT_SPLIT:
            self.component_splits += 1
        elif kind == TraceKind.CLIQUE_SPLIT:
            self.clique_splits += 1
        elif kind == TraceKind.DELETE_CONTRACT:
            self.delete_contracts += 1
        elif kind == TraceKind.CLOSED_FORM:
            self.closed_forms += 1
        elif kind == TraceKind.MEMO_HIT:
            self.memo_hits += 1

    def per_kind(self) -> typing.Dict[typing.Text, int]:
        return {
            TraceKind.COMPONENT_SPLIT.value: self.component_splits,
            TraceKind.CLIQUE_SPLIT.value: self.clique_splits,
            TraceKind.DELETE_CONTRACT.value: self.delete_contracts,
            TraceKind.CLOSED_FORM.value: self.closed_forms,
            TraceKind.MEMO_HIT.value: self.memo_hits,
        }


class TraceFrame(pydantic.BaseModel):
    """One open sub-problem on the path to where a run was aborted."""

    model_config = pydantic.ConfigDict(frozen=True)

    kind: TraceKind | None = None
    depth: int
    vertices: int
    edges: int
    detail: typing.Text = ""
