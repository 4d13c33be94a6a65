import logging
import typing

from chromapoly.closed_forms import closed_form
from chromapoly.types.family import FamilyMatch
from chromapoly.types.polynomial import Polynomial
from chromapoly.types.trace import (
    CliqueSplit,
    ClosedForm,
    ComponentSplit,
    DeleteContract,
    MemoHit,
    ReductionTrace,
    TraceNode,
)

from ._engine import crt1_combine

logger = logging.getLogger(__name__)


def replay(trace: ReductionTrace) -> Polynomial:
    """Recompute the polynomial of a trace bottom-up."""
    return _replay(trace.root)


def _replay(node: TraceNode) -> Polynomial:
    if isinstance(node, ClosedForm):
        return closed_form(
            FamilyMatch(family=node.family, parameters=node.parameters)
        )
    if isinstance(node, MemoHit):
        return Polynomial.from_descending(node.coefficients)
    if isinstance(node, ComponentSplit):
        result = Polynomial.one()
        for child in node.children:
            result = result * _replay(child)
        return result
    if isinstance(node, CliqueSplit):
        return crt1_combine([_replay(c) for c in node.children], node.clique_size)
    if isinstance(node, DeleteContract):
        return _replay(node.delete_child) - _replay(node.contract_child)
    raise TypeError(f"Unknown trace node: {type(node).__name__}")


def summarize(trace: ReductionTrace) -> typing.Dict[typing.Text, int]:
    """Node count per reduction kind."""
    return {kind.value: count for kind, count in trace.counts().items()}
