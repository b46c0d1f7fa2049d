"""Exhaustive generation of free trees up to isomorphism, with segment filters.

The generator is networkx's level-sequence successor enumerator
(`nonisomorphic_trees`), which emits each isomorphism class exactly once in
a deterministic order; the independent Prüfer-plus-canonical-dedup oracle
lives in the test suite.  Streams are lazy so filters compose without
materializing a whole order class.
"""

from __future__ import annotations

from typing import Iterable, Iterator

import networkx as nx

from .generators import UnrealizableError, normalize_segment_lengths
from .trees import Tree, segment_sequence

MAX_ORDER = 16


def all_trees(n: int) -> Iterator[Tree]:
    """Every free tree of order *n*, one representative per isomorphism class."""
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"order must be in 1..{MAX_ORDER}")
    if n == 1:
        yield Tree.from_edges([], n=1)
        return
    if n == 2:
        yield Tree.from_edges([(0, 1)], n=2)
        return
    for g in nx.nonisomorphic_trees(n):
        yield Tree.from_edges(g.edges(), n=n)


def trees_with_segment_sequence(lengths: Iterable[int]) -> Iterator[Tree]:
    """All trees whose segment sequence equals *lengths* (up to isomorphism)."""
    target = normalize_segment_lengths(lengths)
    if len(target) == 2:
        raise UnrealizableError("no tree has exactly two segments")
    n = 1 + sum(target)
    for t in all_trees(n):
        if segment_sequence(t) == target:
            yield t


def trees_with_segment_count(n: int, m: int) -> Iterator[Tree]:
    """All trees of order *n* with exactly *m* segments (possibly none)."""
    for t in all_trees(n):
        if t.n == 1:
            if m == 0:
                yield t
            continue
        if len(segment_sequence(t)) == m:
            yield t


def segment_sequences_of_order(n: int) -> list[tuple[int, ...]]:
    """Every realizable segment sequence of order *n*: partitions of n - 1
    into one part or at least three, in descending lexicographic order."""
    if n < 2:
        return []
    out = [p for p in _partitions(n - 1) if len(p) != 2]
    out.sort(reverse=True)
    return out


def _partitions(total: int, largest: int | None = None) -> list[tuple[int, ...]]:
    if total == 0:
        return [()]
    if largest is None:
        largest = total
    out = []
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, first):
            out.append((first,) + rest)
    return out
