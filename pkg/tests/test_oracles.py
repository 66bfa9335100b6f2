"""Exact oracles: spans, domination enumeration and DP, Steiner variants."""

import random
from collections import deque
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from steinerdom import (
    CapExceededError,
    GeneratorSpec,
    OracleCaps,
    ParentArray,
    SteinerTreeSpan,
    ValidationError,
    build_adjacency,
    domination_number_dp,
    enumerate_parent_arrays,
    gen,
    is_dominating_set,
    is_steiner_set,
    leaf_set,
    min_dominating_set,
    min_steiner_dominating_set,
    steiner_distance,
    steiner_number,
    steiner_subtree,
)

from conftest import adjacency, forest_arrays, path_array, tree_arrays

P5 = adjacency(0, 1, 2, 3, 4)
STAR4 = adjacency(0, 1, 1, 1)


def bfs_distance(t, u, v):
    """Independent path-length computation for cross-checking spans."""
    adj = [[] for _ in range(t.n + 1)]
    for i, p in enumerate(t.parent):
        if p:
            adj[i + 1].append(p)
            adj[p].append(i + 1)
    dist = {u: 0}
    q = deque([u])
    while q:
        x = q.popleft()
        if x == v:
            return dist[x]
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                q.append(y)
    raise AssertionError("disconnected")


class TestSteinerSubtree:
    def test_p5_endpoints_span_everything(self):
        assert steiner_subtree(P5, (1, 5)) == SteinerTreeSpan((1, 2, 3, 4, 5), 4)

    def test_p5_subpath(self):
        assert steiner_subtree(P5, (2, 4)) == SteinerTreeSpan((2, 3, 4), 2)

    def test_star_passes_through_center(self):
        assert steiner_subtree(STAR4, (2, 3)) == SteinerTreeSpan((1, 2, 3), 2)

    def test_single_terminal(self):
        assert steiner_subtree(P5, (3,)) == SteinerTreeSpan((3,), 0)

    def test_empty_rejected(self):
        with pytest.raises(ValidationError):
            steiner_subtree(P5, ())

    def test_out_of_range_rejected(self):
        with pytest.raises(ValidationError):
            steiner_subtree(P5, (6,))

    def test_forest_rejected(self):
        with pytest.raises(ValidationError):
            steiner_subtree(adjacency(0, 0), (1,))

    @given(tree_arrays(min_n=2, max_n=30), st.data())
    def test_pair_span_is_path_distance(self, pa, data):
        t = build_adjacency(pa)
        u = data.draw(st.integers(1, pa.n))
        v = data.draw(st.integers(1, pa.n))
        assert steiner_distance(t, (u, v)) == bfs_distance(t, u, v)

    @given(tree_arrays(min_n=2, max_n=20), st.data())
    def test_distance_monotone_under_terminal_growth(self, pa, data):
        t = build_adjacency(pa)
        w2 = tuple(
            sorted(
                data.draw(
                    st.sets(st.integers(1, pa.n), min_size=1, max_size=pa.n)
                )
            )
        )
        w1 = tuple(sorted(data.draw(st.sets(st.sampled_from(w2), min_size=1))))
        assert steiner_distance(t, w1) <= steiner_distance(t, w2)

    @given(tree_arrays(min_n=2, max_n=30), st.data())
    def test_span_invariants(self, pa, data):
        t = build_adjacency(pa)
        w = tuple(sorted(data.draw(st.sets(st.integers(1, pa.n), min_size=1))))
        span = steiner_subtree(t, w)
        assert set(w) <= set(span.vertices)
        assert span.edge_count == len(span.vertices) - 1


class TestIsSteinerSet:
    def test_p5(self):
        assert is_steiner_set(P5, (1, 5))
        assert not is_steiner_set(P5, (1, 4))

    @given(tree_arrays(min_n=2, max_n=60))
    def test_leaf_set_always_spans(self, pa):
        t = build_adjacency(pa)
        assert is_steiner_set(t, leaf_set(t))


class TestIsDominatingSet:
    def test_p5(self):
        assert is_dominating_set(P5, (2, 4))
        assert not is_dominating_set(P5, (1, 5))

    def test_star_center(self):
        assert is_dominating_set(STAR4, (1,))

    def test_out_of_range(self):
        with pytest.raises(ValidationError):
            is_dominating_set(P5, (0,))


class TestMinDominatingSet:
    def test_p5_first_witness(self):
        # {1,4} dominates and precedes {2,4} lexicographically
        assert min_dominating_set(P5) == (2, (1, 4))

    def test_star(self):
        assert min_dominating_set(STAR4) == (1, (1,))

    def test_two_isolated(self):
        assert min_dominating_set(adjacency(0, 0)) == (2, (1, 2))

    def test_empty(self):
        assert min_dominating_set(adjacency()) == (0, ())

    def test_cap(self):
        with pytest.raises(CapExceededError):
            min_dominating_set(build_adjacency(path_array(21)))
        # caps are configuration: a larger budget admits the instance
        big = OracleCaps(dominating=25)
        assert min_dominating_set(build_adjacency(path_array(21)), big)[0] == 7

    @given(forest_arrays(min_n=1, max_n=12))
    def test_witness_is_consistent(self, pa):
        f = build_adjacency(pa)
        size, witness = min_dominating_set(f)
        assert len(witness) == size
        assert is_dominating_set(f, witness)


class TestDominationDp:
    @pytest.mark.parametrize("k", range(1, 13))
    def test_paths(self, k):
        assert domination_number_dp(build_adjacency(path_array(k))) == -(-k // 3)

    def test_star(self):
        assert domination_number_dp(adjacency(0, 1, 1, 1, 1)) == 1

    def test_empty(self):
        assert domination_number_dp(adjacency()) == 0

    @pytest.mark.slow
    def test_concordance_exhaustive_forests(self):
        """The DP and the subset enumeration agree on every forest with
        up to 9 vertices (409,113 instances)."""
        checked = 0
        for n in range(1, 10):
            for pa in enumerate_parent_arrays(n, "forests"):
                f = build_adjacency(pa)
                assert min_dominating_set(f)[0] == domination_number_dp(f)
                checked += 1
        assert checked == 409113

    @pytest.mark.slow
    def test_concordance_random_forests(self):
        rng = random.Random(20240811)
        caps = OracleCaps()
        for _ in range(2000):
            n = rng.randint(1, caps.dominating - 2)
            pa = ParentArray(
                n, tuple(0 if i == 0 else rng.randint(0, i) for i in range(n))
            )
            f = build_adjacency(pa)
            assert min_dominating_set(f, caps)[0] == domination_number_dp(f)


class TestMinSteinerDominatingSet:
    def test_p5(self):
        assert min_steiner_dominating_set(P5) == (3, (1, 2, 5))

    def test_star(self):
        assert min_steiner_dominating_set(STAR4) == (3, (2, 3, 4))

    def test_double_spider(self):
        t = adjacency(0, 1, 1, 1, 3, 4, 5, 6)
        assert min_steiner_dominating_set(t) == (4, (1, 2, 7, 8))
        assert min_steiner_dominating_set(t, prune=True) == (4, (1, 2, 7, 8))

    def test_p2(self):
        assert min_steiner_dominating_set(adjacency(0, 1)) == (2, (1, 2))

    def test_caps_by_mode(self):
        t19 = build_adjacency(path_array(19))
        with pytest.raises(CapExceededError):
            min_steiner_dominating_set(t19)
        assert min_steiner_dominating_set(t19, prune=True)[0] == 7
        with pytest.raises(CapExceededError):
            min_steiner_dominating_set(build_adjacency(path_array(25)), prune=True)

    def test_forest_rejected(self):
        with pytest.raises(ValidationError):
            min_steiner_dominating_set(adjacency(0, 0))

    @given(tree_arrays(min_n=2, max_n=10))
    def test_witness_passes_both_definitions(self, pa):
        t = build_adjacency(pa)
        size, witness = min_steiner_dominating_set(t)
        assert len(witness) == size
        assert is_steiner_set(t, witness)
        assert is_dominating_set(t, witness)

    @settings(max_examples=60)
    @given(tree_arrays(min_n=2, max_n=12))
    def test_pruned_agrees_with_unpruned(self, pa):
        t = build_adjacency(pa)
        assert min_steiner_dominating_set(t) == min_steiner_dominating_set(
            t, prune=True
        )


class TestSteinerNumber:
    def test_p5(self):
        assert steiner_number(P5) == 2

    def test_star(self):
        assert steiner_number(STAR4) == 3

    def test_cap(self):
        with pytest.raises(CapExceededError):
            steiner_number(build_adjacency(path_array(19)))

    @settings(max_examples=60)
    @given(tree_arrays(min_n=2, max_n=12))
    def test_equals_leaf_count(self, pa):
        t = build_adjacency(pa)
        assert steiner_number(t) == len(leaf_set(t))


@pytest.mark.slow
def test_minimum_steiner_sets_contain_every_leaf():
    """Unpruned enumeration of ALL minimum Steiner sets: each one contains
    the full leaf set (exhaustive n <= 7, randomized n <= 12)."""

    def check(t):
        leaves = set(leaf_set(t))
        k = steiner_number(t)
        found = 0
        for combo in combinations(range(1, t.n + 1), k):
            if is_steiner_set(t, combo):
                found += 1
                assert leaves <= set(combo)
        assert found >= 1

    for n in range(2, 8):
        for pa in enumerate_parent_arrays(n, "trees"):
            check(build_adjacency(pa))
    rng = random.Random(424242)
    for _ in range(150):
        n = rng.randint(2, 12)
        check(build_adjacency(gen(GeneratorSpec("prufer", n=n, seed=rng.getrandbits(64)))))
