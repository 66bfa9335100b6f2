"""Rooted tree/forest representations and neighborhood primitives.

Vertices are labelled 1..n throughout.  The canonical in-memory form is a
parent array: ``parent[i] < i`` for every vertex i, with 0 as the "no
parent" sentinel marking roots.  That ordering makes every array acyclic by
construction and lets the labelling algorithms run in a single pass.
Unrooted trees arrive as edge lists and are canonicalized by a BFS
relabeling that restores the ordering.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass


class TreeModelError(ValueError):
    """Base class for ingestion and validation failures."""


class ParseError(TreeModelError):
    """Malformed .par / .edg input; message carries line diagnostics."""


class ValidationError(TreeModelError):
    """Structurally invalid tree, forest, or vertex set."""


@dataclass(frozen=True)
class ParentArray:
    """A rooted forest as a parent array.

    ``parent[i - 1]`` is the parent label of vertex i, with 0 for roots.
    Every entry satisfies parent < vertex, so children always carry larger
    labels than their parents.  n = 0 (the empty forest) is allowed so that
    an empty induced subforest can be passed around without special cases;
    the file formats themselves require n >= 1.
    """

    n: int
    parent: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValidationError(f"vertex count must be >= 0, got {self.n}")
        if len(self.parent) != self.n:
            raise ValidationError(
                f"parent array has {len(self.parent)} entries, expected {self.n}"
            )
        for idx, p in enumerate(self.parent):
            # vertex label is idx + 1; parent must be in {0, .., idx}
            if not 0 <= p <= idx:
                raise ValidationError(
                    f"parent of vertex {idx + 1} is {p} "
                    f"(must be in 0..{idx})"
                )

    def roots(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, p in enumerate(self.parent) if p == 0)


@dataclass(frozen=True)
class EdgeList:
    """An unrooted graph on labels 1..n given as unordered edges."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        seen = set()
        for u, v in self.edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValidationError(
                    f"edge ({u}, {v}) has a label outside 1..{self.n}"
                )
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValidationError(f"duplicate edge ({key[0]}, {key[1]})")
            seen.add(key)


@dataclass(frozen=True)
class AdjacencyTree:
    """Children lists and unrooted degrees derived from a ParentArray.

    degree counts the undirected incidences: child count plus one for the
    parent edge on non-roots.
    """

    n: int
    parent: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]
    degree: tuple[int, ...]


@dataclass(frozen=True)
class ShapeReport:
    root_labels: tuple[int, ...]


def parse_parent_file(text: str) -> ParentArray:
    """Parse the .par format: line 1 is n, line 2 is n parent entries.

    Raises ParseError with a line diagnostic for malformed integers, entry
    count mismatches, parent >= vertex violations, and a missing root.
    """
    lines = text.splitlines()
    stripped = [ln.strip() for ln in lines]
    body = [(i + 1, ln) for i, ln in enumerate(stripped) if ln]
    if not body:
        raise ParseError("line 1: empty input, expected a vertex count")
    lineno, head = body[0]
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"line {lineno}: {head!r} is not an integer vertex count") from None
    if n < 1:
        raise ParseError(f"line {lineno}: vertex count must be >= 1, got {n}")
    if len(body) < 2:
        raise ParseError(f"line {lineno}: missing parent entries for {n} vertices")
    if len(body) > 2:
        raise ParseError(f"line {body[2][0]}: unexpected extra line")
    lineno, row = body[1]
    tokens = row.split()
    if len(tokens) != n:
        raise ParseError(
            f"line {lineno}: expected {n} parent entries, found {len(tokens)}"
        )
    parent = []
    for pos, tok in enumerate(tokens, start=1):
        try:
            p = int(tok)
        except ValueError:
            raise ParseError(
                f"line {lineno}, entry {pos}: {tok!r} is not an integer"
            ) from None
        if pos == 1 and p != 0:
            raise ParseError(
                f"line {lineno}, entry 1: vertex 1 must be a root (parent 0), got {p}"
            )
        if not 0 <= p < pos:
            raise ParseError(
                f"line {lineno}, entry {pos}: parent {p} of vertex {pos} "
                f"must be in 0..{pos - 1}"
            )
        parent.append(p)
    return ParentArray(n, tuple(parent))


def parse_edge_list(text: str) -> EdgeList:
    """Parse the .edg format: line 1 is n, then n-1 lines "u v".

    Connectivity is not checked here; relabel_bfs rejects disconnected
    input.
    """
    lines = text.splitlines()
    stripped = [ln.strip() for ln in lines]
    body = [(i + 1, ln) for i, ln in enumerate(stripped) if ln]
    if not body:
        raise ParseError("line 1: empty input, expected a vertex count")
    lineno, head = body[0]
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"line {lineno}: {head!r} is not an integer vertex count") from None
    if n < 1:
        raise ParseError(f"line {lineno}: vertex count must be >= 1, got {n}")
    rows = body[1:]
    if len(rows) != n - 1:
        raise ParseError(
            f"line {lineno}: expected {n - 1} edge lines for {n} vertices, "
            f"found {len(rows)}"
        )
    edges = []
    seen = set()
    for lineno, row in rows:
        tokens = row.split()
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected an edge 'u v', got {row!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"line {lineno}: edge {row!r} has a non-integer label") from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(
                f"line {lineno}: edge ({u}, {v}) has a label outside 1..{n}"
            )
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ParseError(f"line {lineno}: duplicate edge ({key[0]}, {key[1]})")
        seen.add(key)
        edges.append((u, v))
    return EdgeList(n, tuple(edges))


def format_parent_file(parents: ParentArray) -> str:
    """Canonical .par text for a ParentArray (inverse of parse_parent_file)."""
    if parents.n < 1:
        raise ValidationError("cannot format an empty forest as a .par file")
    return f"{parents.n}\n{' '.join(str(p) for p in parents.parent)}\n"


def relabel_bfs(
    edges: EdgeList, root: int | None = None
) -> tuple[ParentArray, tuple[int, ...]]:
    """Relabel a connected edge list into parent-array form via BFS.

    New labels follow BFS visit order from the root, so every parent gets a
    smaller label than its children.  ``root=None`` picks a vertex of
    maximum degree, ties broken by smallest original label; for n >= 3 that
    root is never a leaf.  Neighbors are visited in ascending original
    label order, making the relabeling deterministic.

    Returns the ParentArray and a label map with ``label_map[old - 1] ==
    new``.
    """
    n = edges.n
    if len(edges.edges) != n - 1:
        raise ValidationError(
            f"tree on {n} vertices needs {n - 1} edges, got {len(edges.edges)}"
        )
    adj: list[list[int]] = [[] for _ in range(n + 1)]
    for u, v in edges.edges:
        adj[u].append(v)
        adj[v].append(u)
    for nbrs in adj:
        nbrs.sort()
    if root is None:
        root = max(range(1, n + 1), key=lambda v: (len(adj[v]), -v))
    elif not 1 <= root <= n:
        raise ValidationError(f"root {root} out of range 1..{n}")

    new_of = [0] * (n + 1)
    parent = [0] * n
    new_of[root] = 1
    assigned = 1
    queue = deque([root])
    while queue:
        old = queue.popleft()
        for nbr in adj[old]:
            if new_of[nbr] == 0:
                assigned += 1
                new_of[nbr] = assigned
                parent[assigned - 1] = new_of[old]
                queue.append(nbr)
    if assigned != n:
        raise ValidationError(
            f"edge list is disconnected: reached {assigned} of {n} vertices"
        )
    return ParentArray(n, tuple(parent)), tuple(new_of[1:])


def validate(parents: ParentArray, mode: str = "tree") -> ShapeReport:
    """Check root structure: exactly one root in tree mode, any number in
    forest mode.  Returns the root labels."""
    if mode not in ("tree", "forest"):
        raise ValueError(f"mode must be 'tree' or 'forest', got {mode!r}")
    roots = parents.roots()
    if mode == "tree" and len(roots) != 1:
        raise ValidationError(
            f"tree mode requires exactly one root, found {len(roots)}: {list(roots)}"
        )
    return ShapeReport(root_labels=roots)


def build_adjacency(parents: ParentArray) -> AdjacencyTree:
    """Derive children lists and unrooted degrees in O(n)."""
    n = parents.n
    kids: list[list[int]] = [[] for _ in range(n)]
    for i, p in enumerate(parents.parent):
        if p != 0:
            kids[p - 1].append(i + 1)
    degree = tuple(
        len(kids[i]) + (1 if parents.parent[i] != 0 else 0) for i in range(n)
    )
    return AdjacencyTree(
        n=n,
        parent=parents.parent,
        children=tuple(tuple(k) for k in kids),
        degree=degree,
    )


def leaf_set(t: AdjacencyTree) -> tuple[int, ...]:
    """End-vertices of a single tree: every vertex of unrooted degree 1.

    Degree-based on purpose, so a degree-1 root counts as a leaf just like
    any other end-vertex.  The single vertex of K1 is its own leaf by
    convention.
    """
    roots = [i + 1 for i, p in enumerate(t.parent) if p == 0]
    if len(roots) != 1:
        raise ValidationError(
            f"leaf_set needs a single tree, found {len(roots)} roots"
        )
    if t.n == 1:
        return (1,)
    return tuple(v + 1 for v in range(t.n) if t.degree[v] == 1)


def closed_neighborhood(t: AdjacencyTree, s: tuple[int, ...]) -> tuple[int, ...]:
    """N[S]: the members of s together with every adjacent vertex."""
    covered = set()
    for v in s:
        if not 1 <= v <= t.n:
            raise ValidationError(f"vertex {v} out of range 1..{t.n}")
        covered.add(v)
        covered.update(t.children[v - 1])
        p = t.parent[v - 1]
        if p != 0:
            covered.add(p)
    return tuple(sorted(covered))


def to_edge_list(parents: ParentArray) -> EdgeList:
    """Forget the rooting: each parent link becomes an unordered edge."""
    edges = []
    for i, p in enumerate(parents.parent):
        if p != 0:
            v = i + 1
            edges.append((p, v) if p < v else (v, p))
    return EdgeList(parents.n, tuple(edges))
