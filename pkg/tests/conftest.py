"""Shared strategies and helpers for the suite.

Strategies build parent arrays directly in the representation's invariant
form (parent < vertex), so every drawn instance is valid by construction
and shrinking stays inside the domain.
"""

from __future__ import annotations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from steinerdom import ParentArray, build_adjacency

settings.register_profile(
    "suite",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@st.composite
def tree_arrays(draw, min_n: int = 1, max_n: int = 24) -> ParentArray:
    """Uniformly shaped random single-tree parent arrays."""
    n = draw(st.integers(min_n, max_n))
    parent = [0]
    for i in range(1, n):
        parent.append(draw(st.integers(1, i)))
    return ParentArray(n, tuple(parent))


@st.composite
def forest_arrays(draw, min_n: int = 0, max_n: int = 24) -> ParentArray:
    """Random forest parent arrays, any number of roots, n=0 allowed."""
    n = draw(st.integers(min_n, max_n))
    parent = []
    for i in range(n):
        parent.append(draw(st.integers(0, i)))
    return ParentArray(n, tuple(parent))


def adjacency(*parent: int):
    """Shorthand: build an AdjacencyTree straight from parent entries."""
    return build_adjacency(ParentArray(len(parent), tuple(parent)))


def path_array(n: int) -> ParentArray:
    return ParentArray(n, (0,) + tuple(range(1, n)))


def star_array(n: int) -> ParentArray:
    return ParentArray(n, (0,) + (1,) * (n - 1))
