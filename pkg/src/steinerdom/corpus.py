"""Instance generators: structured families, uniform random trees, and
exhaustive small-instance streams.

Random families are deterministic in (family, n, params, seed).  The
prufer family samples uniformly over labeled trees by decoding a uniform
random Prüfer sequence, then canonicalizes through relabel_bfs; families
built from explicit edge lists (spider, caterpillar) go through the same
canonicalization so their output is independent of construction order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .tree_model import EdgeList, ParentArray, ValidationError, relabel_bfs

FAMILIES = (
    "path",
    "star",
    "spider",
    "caterpillar",
    "binary",
    "prufer",
    "random_parent",
)

ENUMERATION_MAX_N = 10


@dataclass(frozen=True)
class GeneratorSpec:
    """One instance request.  n is derived from the shape parameters for
    spider (1 + legs * leg_length) and caterpillar (spine + leg sum); for
    those families an explicit n must agree with the derived value."""

    family: str
    n: int | None = None
    seed: int = 0
    legs: int | None = None
    leg_length: int | None = None
    spine: int | None = None
    pattern: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValidationError(
                f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}"
            )
        if not 0 <= self.seed < 2**64:
            raise ValidationError("seed must fit in 64 bits")


def _require_n(spec: GeneratorSpec) -> int:
    if spec.n is None:
        raise ValidationError(f"family {spec.family!r} requires n")
    if spec.n < 1:
        raise ValidationError(f"n must be >= 1, got {spec.n}")
    return spec.n


def _spider_edges(legs: int, leg_length: int) -> EdgeList:
    n = 1 + legs * leg_length
    edges = []
    nxt = 2
    for _ in range(legs):
        prev = 1
        for _ in range(leg_length):
            edges.append((prev, nxt) if prev < nxt else (nxt, prev))
            prev = nxt
            nxt += 1
    return EdgeList(n, tuple(edges))


def _caterpillar_edges(spine: int, pattern: tuple[int, ...]) -> EdgeList:
    n = spine + sum(pattern[i % len(pattern)] for i in range(spine))
    edges = [(i, i + 1) for i in range(1, spine)]
    nxt = spine + 1
    for i in range(spine):
        for _ in range(pattern[i % len(pattern)]):
            edges.append((i + 1, nxt))
            nxt += 1
    return EdgeList(n, tuple(edges))


def _prufer_to_edges(n: int, seq: list[int]) -> EdgeList:
    """Decode a Prüfer sequence into its labeled tree, O(n) pointer scan."""
    deg = [1] * (n + 1)
    for x in seq:
        deg[x] += 1
    edges = []
    ptr = 1
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in seq:
        edges.append((leaf, x) if leaf < x else (x, leaf))
        deg[x] -= 1
        if deg[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n))
    return EdgeList(n, tuple(edges))


def random_prufer_edges(n: int, seed: int) -> EdgeList:
    """A uniform random labeled tree on 1..n, before any relabeling.

    Exposed separately from gen() so the uniformity of the raw labeled
    distribution stays observable; gen() canonicalizes and therefore
    collapses label classes.
    """
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")
    if n == 1:
        return EdgeList(1, ())
    if n == 2:
        return EdgeList(2, ((1, 2),))
    rng = random.Random(seed)
    seq = [rng.randint(1, n) for _ in range(n - 2)]
    return _prufer_to_edges(n, seq)


def gen(spec: GeneratorSpec) -> ParentArray:
    """Build the requested instance as a canonical parent array."""
    family = spec.family
    if family == "path":
        n = _require_n(spec)
        return ParentArray(n, (0,) + tuple(range(1, n)))
    if family == "star":
        n = _require_n(spec)
        return ParentArray(n, (0,) + (1,) * (n - 1))
    if family == "binary":
        n = _require_n(spec)
        return ParentArray(n, tuple(i // 2 for i in range(1, n + 1)))
    if family == "random_parent":
        n = _require_n(spec)
        rng = random.Random(spec.seed)
        return ParentArray(
            n, (0,) + tuple(rng.randint(1, i) for i in range(1, n))
        )
    if family == "prufer":
        n = _require_n(spec)
        edges = random_prufer_edges(n, spec.seed)
        if n == 1:
            return ParentArray(1, (0,))
        return relabel_bfs(edges)[0]
    if family == "spider":
        if spec.legs is None or spec.leg_length is None:
            raise ValidationError("spider requires legs and leg_length")
        if spec.legs < 2:
            raise ValidationError(f"spider requires legs >= 2, got {spec.legs}")
        if spec.leg_length < 1:
            raise ValidationError(
                f"spider requires leg_length >= 1, got {spec.leg_length}"
            )
        edges = _spider_edges(spec.legs, spec.leg_length)
        if spec.n is not None and spec.n != edges.n:
            raise ValidationError(
                f"spider with legs={spec.legs} leg_length={spec.leg_length} "
                f"has {edges.n} vertices, not {spec.n}"
            )
        return relabel_bfs(edges)[0]
    if family == "caterpillar":
        if spec.spine is None:
            raise ValidationError("caterpillar requires spine")
        if spec.spine < 1:
            raise ValidationError(f"caterpillar requires spine >= 1, got {spec.spine}")
        pattern = spec.pattern if spec.pattern is not None else (1,)
        if not pattern or any(c < 0 for c in pattern):
            raise ValidationError("caterpillar pattern must be non-negative counts")
        edges = _caterpillar_edges(spec.spine, pattern)
        if spec.n is not None and spec.n != edges.n:
            raise ValidationError(
                f"caterpillar with spine={spec.spine} pattern={pattern} "
                f"has {edges.n} vertices, not {spec.n}"
            )
        return relabel_bfs(edges)[0]
    raise AssertionError(f"unhandled family {family!r}")


def enumerate_parent_arrays(n: int, mode: str = "trees") -> Iterator[ParentArray]:
    """All parent arrays on n vertices, lexicographic, no duplicates.

    trees mode fixes parent[1] = 0 and draws parent[i] from 1..i-1,
    giving (n-1)! single-tree arrays; forests mode draws parent[i] from
    0..i-1, giving n! arrays with any number of roots.  Capped at n <= 10
    because the streams are factorial.
    """
    if mode not in ("trees", "forests"):
        raise ValueError(f"mode must be 'trees' or 'forests', got {mode!r}")
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")
    if n > ENUMERATION_MAX_N:
        raise ValidationError(
            f"n={n} exceeds enumeration cap {ENUMERATION_MAX_N}"
        )
    if mode == "trees":
        ranges = [range(1, i) for i in range(2, n + 1)]
        for tail in product(*ranges):
            yield ParentArray(n, (0,) + tail)
    else:
        ranges = [range(0, i) for i in range(1, n + 1)]
        for combo in product(*ranges):
            yield ParentArray(n, combo)


# The 8-vertex double spider: a leaf on the center plus two length-3 legs.
# Its construction answer exceeds the true optimum by one, which makes it
# the canonical reproducible audit case; the same array ships as
# fixtures/theorem1-audit-8.par.
FIXTURES: dict[str, ParentArray] = {
    "theorem1-audit-8": ParentArray(8, (0, 1, 1, 1, 3, 4, 5, 6)),
}


def fixture(name: str) -> ParentArray:
    if name not in FIXTURES:
        raise ValidationError(
            f"unknown fixture {name!r}; available: {', '.join(sorted(FIXTURES))}"
        )
    return FIXTURES[name]
