"""Minimum dominating set of a rooted forest in one bottom-up pass.

Three-state greedy over a parent array: every vertex starts Bound (needs
domination), a Bound vertex promotes its parent to Required, a Required
vertex is taken into the set and Frees a still-Bound parent.  Because
parent < vertex everywhere, the single descending loop visits all children
before their parent, and a parent value of 0 stops any propagation between
the trees of the forest.  A final ascending sweep collects roots that are
still Bound or Required.
"""

from __future__ import annotations

from enum import IntEnum

from .tree_model import ParentArray


class LabelState(IntEnum):
    BOUND = 0
    REQUIRED = 1
    FREE = 2


Transition = tuple[int, LabelState, LabelState]


def forest_domination(
    parents: ParentArray, trace: list[Transition] | None = None
) -> tuple[int, ...]:
    """Return a minimum dominating set of the forest, ascending labels.

    The empty forest yields the empty set.  When ``trace`` is a list, every
    actual state change is appended as (vertex, old_state, new_state).
    """
    n = parents.n
    par = parents.parent
    label = bytearray(n + 1)  # LabelState values; index 0 unused sentinel
    bound = int(LabelState.BOUND)
    required = int(LabelState.REQUIRED)
    free = int(LabelState.FREE)
    # a list, not a set: states settle before each vertex's own visit, so
    # the main loop takes each Required vertex exactly once and the sweep
    # only has to pick up roots nothing ever dominated
    chosen: list[int] = []
    for i in range(n, 0, -1):
        p = par[i - 1]
        li = label[i]
        if li == bound and p != 0:
            if trace is not None and label[p] != required:
                trace.append((p, LabelState(label[p]), LabelState.REQUIRED))
            label[p] = required
        elif li == required:
            chosen.append(i)
            # p == 0 would index the sentinel; roots are swept afterwards
            if p != 0 and label[p] == bound:
                if trace is not None:
                    trace.append((p, LabelState.BOUND, LabelState.FREE))
                label[p] = free
    for i in range(1, n + 1):
        if par[i - 1] == 0 and label[i] == bound:
            chosen.append(i)
    return tuple(sorted(chosen))
