"""Definition-driven exact computations used as ground truth in tests.

Everything here works straight from the definitions: spanning subtrees by
iterative pruning, dominating sets by subset enumeration or an independent
dynamic program, Steiner sets by actually computing the span.  None of it
shares logic with the linear labeling passes it is used to check.

Subset enumeration visits candidates in increasing size, then
lexicographic order, so returned witnesses are deterministic.  Size caps
keep the exponential searches at desk scale; they are configuration, not
logic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .tree_model import AdjacencyTree, ValidationError


class CapExceededError(ValueError):
    """Instance larger than the enumeration cap for the requested oracle."""


@dataclass(frozen=True)
class OracleCaps:
    """Largest n each enumeration oracle will accept."""

    dominating: int = 20
    steiner_dominating: int = 18
    steiner_dominating_pruned: int = 24
    steiner_number: int = 18


DEFAULT_CAPS = OracleCaps()


@dataclass(frozen=True)
class SteinerTreeSpan:
    """The unique minimal subtree spanning a terminal set in a tree."""

    vertices: tuple[int, ...]
    edge_count: int


def _single_root(t: AdjacencyTree) -> None:
    if sum(1 for p in t.parent if p == 0) != 1:
        raise ValidationError("operation requires a single tree")


def _prune_to_span(t: AdjacencyTree, terminals: set[int]) -> tuple[bytearray, int]:
    """Iteratively delete degree-1 vertices outside the terminal set.

    Returns (alive flags indexed 1..n, survivor count).  In a tree the
    surviving vertices are exactly the unique minimal connected subgraph
    containing the terminals.
    """
    n = t.n
    deg = list(t.degree)
    alive = bytearray(n + 1)
    for i in range(1, n + 1):
        alive[i] = 1
    stack = [v for v in range(1, n + 1) if deg[v - 1] == 1 and v not in terminals]
    survivors = n
    while stack:
        v = stack.pop()
        alive[v] = 0
        survivors -= 1
        p = t.parent[v - 1]
        for u in t.children[v - 1]:
            if alive[u]:
                deg[u - 1] -= 1
                if deg[u - 1] == 1 and u not in terminals:
                    stack.append(u)
        if p != 0 and alive[p]:
            deg[p - 1] -= 1
            if deg[p - 1] == 1 and p not in terminals:
                stack.append(p)
    return alive, survivors


def steiner_subtree(t: AdjacencyTree, w: tuple[int, ...]) -> SteinerTreeSpan:
    """Minimal subtree of t spanning the non-empty vertex set w."""
    _single_root(t)
    if not w:
        raise ValidationError("terminal set must be non-empty")
    terminals = set()
    for v in w:
        if not 1 <= v <= t.n:
            raise ValidationError(f"vertex {v} out of range 1..{t.n}")
        terminals.add(v)
    alive, survivors = _prune_to_span(t, terminals)
    vertices = tuple(v for v in range(1, t.n + 1) if alive[v])
    return SteinerTreeSpan(vertices=vertices, edge_count=survivors - 1)


def steiner_distance(t: AdjacencyTree, w: tuple[int, ...]) -> int:
    """Edge count of the minimal subtree spanning w; 0 for a single vertex."""
    return steiner_subtree(t, w).edge_count


def is_steiner_set(t: AdjacencyTree, w: tuple[int, ...]) -> bool:
    """True iff the minimal subtree spanning w covers every vertex."""
    _single_root(t)
    if not w:
        raise ValidationError("terminal set must be non-empty")
    terminals = set()
    for v in w:
        if not 1 <= v <= t.n:
            raise ValidationError(f"vertex {v} out of range 1..{t.n}")
        terminals.add(v)
    _, survivors = _prune_to_span(t, terminals)
    return survivors == t.n


def is_dominating_set(t: AdjacencyTree, s: tuple[int, ...]) -> bool:
    """True iff every vertex is in s or adjacent to a member of s."""
    covered = bytearray(t.n + 1)
    for v in s:
        if not 1 <= v <= t.n:
            raise ValidationError(f"vertex {v} out of range 1..{t.n}")
        covered[v] = 1
        p = t.parent[v - 1]
        if p != 0:
            covered[p] = 1
        for c in t.children[v - 1]:
            covered[c] = 1
    return all(covered[v] for v in range(1, t.n + 1))


def _closed_masks(t: AdjacencyTree) -> list[int]:
    """Closed neighborhood of each vertex as a bitmask (bit v-1), 0-indexed."""
    masks = []
    for v in range(1, t.n + 1):
        m = 1 << (v - 1)
        p = t.parent[v - 1]
        if p != 0:
            m |= 1 << (p - 1)
        for c in t.children[v - 1]:
            m |= 1 << (c - 1)
        masks.append(m)
    return masks


def min_dominating_set(
    f: AdjacencyTree, caps: OracleCaps = DEFAULT_CAPS
) -> tuple[int, tuple[int, ...]]:
    """Exhaustive minimum dominating set of a forest.

    Candidates are visited in increasing size and, within a size,
    lexicographic order of the label tuple, so the witness is the
    deterministic first optimum.
    """
    n = f.n
    if n == 0:
        return 0, ()
    if n > caps.dominating:
        raise CapExceededError(f"n={n} exceeds dominating-set cap {caps.dominating}")
    masks = _closed_masks(f)
    full = (1 << n) - 1
    for k in range(1, n + 1):
        for combo in combinations(range(n), k):
            cover = 0
            for idx in combo:
                cover |= masks[idx]
            if cover == full:
                return k, tuple(i + 1 for i in combo)
    raise AssertionError("the full vertex set always dominates")


def domination_number_dp(f: AdjacencyTree) -> int:
    """Domination number of a forest by a three-way dynamic program.

    Per-vertex cases: taken into the set; not taken but covered by a child;
    not taken and waiting for its parent.  Since parent < vertex, a single
    descending sweep finalizes children before parents; a root pays
    min(taken, covered-by-child).  Linear time, no enumeration, no shared
    code with min_dominating_set.
    """
    n = f.n
    if n == 0:
        return 0
    par = f.parent
    inf = n + 2
    sum_any = [0] * (n + 1)  # sum over children of min(taken, covered, waiting)
    sum_cov = [0] * (n + 1)  # sum over children of min(taken, covered)
    delta = [inf] * (n + 1)  # cheapest upgrade forcing one child to 'taken'
    total = 0
    for i in range(n, 0, -1):
        taken = 1 + sum_any[i]
        waiting = sum_cov[i]
        covered = sum_cov[i] + delta[i]
        if covered > inf:
            covered = inf
        p = par[i - 1]
        if p == 0:
            total += taken if taken < covered else covered
        else:
            best_tc = taken if taken < covered else covered
            best_all = best_tc if best_tc < waiting else waiting
            sum_any[p] += best_all
            sum_cov[p] += best_tc
            d = taken - best_tc
            if d < delta[p]:
                delta[p] = d
    return total


def _leaf_labels(t: AdjacencyTree) -> list[int]:
    if t.n == 1:
        return [1]
    return [v + 1 for v in range(t.n) if t.degree[v] == 1]


def min_steiner_dominating_set(
    t: AdjacencyTree, prune: bool = False, caps: OracleCaps = DEFAULT_CAPS
) -> tuple[int, tuple[int, ...]]:
    """Exhaustive minimum Steiner dominating set of a tree.

    With ``prune=True`` only supersets of the leaf set are enumerated
    (every Steiner set of a tree contains its end-vertices), buying a
    larger cap.  The unpruned mode exists so that claim itself stays
    testable: it assumes nothing and checks every candidate against both
    definitions.
    """
    _single_root(t)
    n = t.n
    cap = caps.steiner_dominating_pruned if prune else caps.steiner_dominating
    if n > cap:
        raise CapExceededError(
            f"n={n} exceeds Steiner-dominating cap {cap} (prune={prune})"
        )
    masks = _closed_masks(t)
    full = (1 << n) - 1
    if prune:
        base = _leaf_labels(t)
        base_cover = 0
        for v in base:
            base_cover |= masks[v - 1]
        others = [v for v in range(1, n + 1) if v not in set(base)]
        # merged witnesses inherit (size, lex) order from the extras
        for extra_k in range(len(others) + 1):
            for combo in combinations(others, extra_k):
                cover = base_cover
                for v in combo:
                    cover |= masks[v - 1]
                if cover == full:
                    w = tuple(sorted(base + list(combo)))
                    if is_steiner_set(t, w):
                        return len(w), w
        raise AssertionError("the full vertex set is Steiner and dominating")
    for k in range(1, n + 1):
        for combo in combinations(range(1, n + 1), k):
            cover = 0
            for v in combo:
                cover |= masks[v - 1]
            if cover == full and is_steiner_set(t, combo):
                return k, combo
    raise AssertionError("the full vertex set is Steiner and dominating")


def steiner_number(t: AdjacencyTree, caps: OracleCaps = DEFAULT_CAPS) -> int:
    """Smallest size of a Steiner set, by plain enumeration."""
    _single_root(t)
    n = t.n
    if n > caps.steiner_number:
        raise CapExceededError(f"n={n} exceeds Steiner-number cap {caps.steiner_number}")
    for k in range(1, n + 1):
        for combo in combinations(range(1, n + 1), k):
            if is_steiner_set(t, combo):
                return k
    raise AssertionError("the full vertex set is a Steiner set")
