"""
The `.edges` text format.

One edge per line as two whitespace-separated vertex names; a line with a
single name declares a vertex. `#` starts a comment. Names are
case-sensitive and vertex ids follow order of first appearance.
"""

import logging
import typing

from chromapoly.exceptions import EdgeListParseError
from chromapoly.types.graph import Graph

logger = logging.getLogger(__name__)

COMMENT: typing.Final[typing.Text] = "#"


def parse_edge_list(text: typing.Text) -> Graph:
    ids: typing.Dict[typing.Text, int] = {}
    edges: typing.List[typing.Tuple[int, int]] = []
    seen: typing.Set[typing.Tuple[int, int]] = set()

    def vertex(name: typing.Text) -> int:
        if name not in ids:
            ids[name] = len(ids)
        return ids[name]

    for line_number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split(COMMENT, 1)[0].split()
        if not tokens:
            continue
        if len(tokens) == 1:
            vertex(tokens[0])
            continue
        if len(tokens) > 2:
            raise EdgeListParseError(
                line_number, f"expected one or two vertex names, got {len(tokens)}"
            )

        a, b = tokens
        if a == b:
            raise EdgeListParseError(line_number, f"self-loop on '{a}'")
        u, v = vertex(a), vertex(b)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise EdgeListParseError(line_number, f"duplicate edge '{a} {b}'")
        seen.add(key)
        edges.append(key)

    logger.debug(f"Parsed {len(ids)} vertices and {len(edges)} edges")
    return Graph(len(ids), edges, labels=list(ids))


def serialize_edge_list(
    g: Graph, *, header: typing.Sequence[typing.Text] = ()
) -> typing.Text:
    """Text that parses back to `g` with the same ids and labels."""
    names = [g.name_of(v) for v in range(g.n)]
    for name in names:
        if not name or COMMENT in name or len(name.split()) != 1:
            raise ValueError(f"Vertex name {name!r} cannot be written as a token")

    lines = [f"{COMMENT} {h}" for h in header]
    for v in range(g.n):
        lower = sorted(u for u in g.neighbors(v) if u < v)
        if not lower:
            lines.append(names[v])
        lines.extend(f"{names[u]} {names[v]}" for u in lower)
    return "\n".join(lines) + "\n"
