"""Edge-list text and DOT serialization for trees."""

from __future__ import annotations

from .trees import InvalidTreeError, Tree


def parse_edge_list(text: str) -> Tree:
    """Parse the plain edge-list format: one edge per line, two 0-based
    decimal ids separated by whitespace; '#' lines are comments.

    The vertex count is inferred as 1 + max id; an empty edge list denotes
    the single-vertex tree.
    """
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InvalidTreeError(f"line {lineno}: expected two vertex ids, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise InvalidTreeError(f"line {lineno}: non-integer vertex id in {line!r}") from exc
        if u < 0 or v < 0:
            raise InvalidTreeError(f"line {lineno}: negative vertex id in {line!r}")
        edges.append((u, v))
    if not edges:
        return Tree.from_edges([], n=1)
    return Tree.from_edges(edges)


def format_edge_list(t: Tree) -> str:
    """One 'u v' line per edge; empty string for the single-vertex tree."""
    return "".join(f"{u} {v}\n" for u, v in t.edges())


def to_dot(t: Tree) -> str:
    """Undirected DOT graph with vertex ids as labels."""
    lines = ["graph tree {"]
    for v in range(t.n):
        lines.append(f'  {v} [label="{v}"];')
    for u, v in t.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
