from __future__ import annotations

import pytest

from segwiener.generators import quasi_caterpillar, starlike
from segwiener.trees import Tree


def path_tree(n: int) -> Tree:
    if n == 1:
        return Tree.from_edges([], n=1)
    return Tree.from_edges([(i, i + 1) for i in range(n - 1)], n=n)


@pytest.fixture
def fig1_top() -> Tree:
    """The order-15 starlike tree with segment sequence (3,2,2,2,1,1,1,1,1)."""
    return starlike((3, 2, 2, 2, 1, 1, 1, 1, 1))


@pytest.fixture
def fig1_bottom() -> Tree:
    """The order-15 quasi-caterpillar with the same segment sequence:
    backbone segments (1,2,1,2), pendants of lengths 1 | 2,3 | 1,1 at its
    three branch vertices."""
    return quasi_caterpillar((1, 2, 1, 2), [(1, 1), (2, 2), (2, 3), (3, 1), (3, 1)])


@pytest.fixture
def k13() -> Tree:
    return starlike((1, 1, 1))
