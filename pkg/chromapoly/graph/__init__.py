from .canonical import canonical_form, canonical_labeling, is_isomorphic
from .families import build_family, interlocking_layout
from .structure import (
    Component,
    connected_components,
    find_clique_separator,
    is_connected,
)
from .surgery import contract_edge, delete_edge, glue_on_clique

__all__ = [
    "Component",
    "build_family",
    "canonical_form",
    "canonical_labeling",
    "connected_components",
    "contract_edge",
    "delete_edge",
    "find_clique_separator",
    "glue_on_clique",
    "interlocking_layout",
    "is_connected",
    "is_isomorphic",
]
