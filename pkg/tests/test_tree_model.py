"""Data model: parsing, validation, relabeling, neighborhood primitives."""

import pytest
from hypothesis import given

from steinerdom import (
    EdgeList,
    ParentArray,
    ParseError,
    ValidationError,
    build_adjacency,
    closed_neighborhood,
    enumerate_parent_arrays,
    format_parent_file,
    leaf_set,
    parse_edge_list,
    parse_parent_file,
    relabel_bfs,
    to_edge_list,
    validate,
)

from conftest import adjacency, path_array, star_array, tree_arrays


class TestParentArray:
    def test_valid(self):
        pa = ParentArray(5, (0, 1, 2, 3, 4))
        assert pa.roots() == (1,)

    def test_empty_allowed(self):
        assert ParentArray(0, ()).roots() == ()

    def test_negative_n(self):
        with pytest.raises(ValidationError):
            ParentArray(-1, ())

    def test_length_mismatch(self):
        with pytest.raises(ValidationError):
            ParentArray(3, (0, 1))

    def test_parent_not_below_vertex(self):
        # vertex 2 may only point at 0 or 1
        with pytest.raises(ValidationError):
            ParentArray(3, (0, 2, 1))

    def test_negative_parent(self):
        with pytest.raises(ValidationError):
            ParentArray(2, (0, -1))

    def test_multiple_roots(self):
        assert ParentArray(4, (0, 0, 1, 2)).roots() == (1, 2)


class TestEdgeList:
    def test_valid(self):
        EdgeList(3, ((1, 2), (2, 3)))

    def test_label_out_of_range(self):
        with pytest.raises(ValidationError):
            EdgeList(3, ((1, 4),))

    def test_self_loop(self):
        with pytest.raises(ValidationError):
            EdgeList(3, ((2, 2),))

    def test_duplicate_either_orientation(self):
        with pytest.raises(ValidationError):
            EdgeList(3, ((1, 2), (2, 1)))


class TestParseParentFile:
    def test_p5(self):
        assert parse_parent_file("5\n0 1 2 3 4\n").parent == (0, 1, 2, 3, 4)

    def test_crlf(self):
        assert parse_parent_file("3\r\n0 1 1\r\n").n == 3

    def test_no_trailing_newline(self):
        assert parse_parent_file("2\n0 1").n == 2

    def test_round_trip(self):
        text = format_parent_file(ParentArray(4, (0, 1, 1, 3)))
        assert text == "4\n0 1 1 3\n"
        assert parse_parent_file(text).parent == (0, 1, 1, 3)

    @pytest.mark.parametrize(
        "text",
        [
            "x\n0 1\n",  # non-integer count
            "0\n\n",  # n < 1
            "2\n",  # missing parent line
            "2\n0\n",  # too few entries
            "2\n0 1 1\n",  # too many entries
            "2\n1 1\n",  # vertex 1 must be a root
            "3\n0 1 3\n",  # parent must stay below its vertex
            "2\n0 a\n",  # non-integer entry
            "",  # empty file
        ],
    )
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_parent_file(text)

    def test_diagnostic_mentions_line(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_parent_file("3\n0 1 9\n")

    @given(tree_arrays(min_n=1, max_n=30))
    def test_format_parse_inverse(self, pa):
        assert parse_parent_file(format_parent_file(pa)) == pa


class TestParseEdgeList:
    def test_p5(self):
        el = parse_edge_list("5\n1 2\n2 3\n3 4\n4 5\n")
        assert el.n == 5 and len(el.edges) == 4

    @pytest.mark.parametrize(
        "text",
        [
            "3\n1 2\n",  # needs exactly n-1 edge lines
            "3\n1 2\n2 3\n1 3\n",  # too many lines
            "3\n1 2\n2 9\n",  # label out of range
            "3\n1 2\n3\n",  # not two labels
            "3\n1 2\na b\n",  # non-integer
            "2\n1 1\n",  # self loop
        ],
    )
    def test_malformed(self, text):
        with pytest.raises((ParseError, ValidationError)):
            parse_edge_list(text)


class TestRelabelBfs:
    def test_p5_explicit_midpoint_root(self):
        pa, label_map = relabel_bfs(to_edge_list(path_array(5)), root=3)
        assert pa.parent == (0, 1, 1, 2, 3)
        assert label_map[3 - 1] == 1  # the chosen root becomes vertex 1

    def test_p5_default_root_is_smallest_max_degree(self):
        # degrees on P5 are 1,2,2,2,1; ties break to the smallest label 2
        pa, label_map = relabel_bfs(to_edge_list(path_array(5)))
        assert label_map[2 - 1] == 1
        assert pa.parent == (0, 1, 1, 3, 4)

    def test_star_roots_at_center(self):
        pa, label_map = relabel_bfs(to_edge_list(star_array(6)))
        assert label_map[0] == 1
        assert pa.parent == (0, 1, 1, 1, 1, 1)

    def test_root_out_of_range(self):
        with pytest.raises(ValidationError):
            relabel_bfs(to_edge_list(path_array(3)), root=4)

    def test_disconnected_rejected(self):
        # 4 vertices, 3 edges, but one is unreachable twice over
        el = EdgeList(4, ((1, 2), (1, 3), (2, 3)))
        with pytest.raises(ValidationError, match="disconnected"):
            relabel_bfs(el)

    def test_wrong_edge_count_rejected(self):
        with pytest.raises(ValidationError):
            relabel_bfs(EdgeList(3, ((1, 2),)))

    def test_single_vertex(self):
        assert relabel_bfs(EdgeList(1, ()))[0] == ParentArray(1, (0,))

    @given(tree_arrays(min_n=1, max_n=40))
    def test_round_trip_preserves_shape(self, pa):
        # the relabeled tree must have the same degree multiset and leaves
        before = build_adjacency(pa)
        relabeled, label_map = relabel_bfs(to_edge_list(pa))
        after = build_adjacency(relabeled)
        assert sorted(before.degree) == sorted(after.degree)
        assert len(leaf_set(before)) == len(leaf_set(after))
        assert sorted(label_map) == list(range(1, pa.n + 1))

    @given(tree_arrays(min_n=2, max_n=20))
    def test_deterministic(self, pa):
        el = to_edge_list(pa)
        assert relabel_bfs(el) == relabel_bfs(el)


class TestValidate:
    def test_tree_accepts_single_root(self):
        assert validate(path_array(3), "tree").root_labels == (1,)

    def test_tree_rejects_forest(self):
        with pytest.raises(ValidationError):
            validate(ParentArray(3, (0, 0, 1)), "tree")

    def test_forest_accepts_many_roots(self):
        assert validate(ParentArray(3, (0, 0, 0)), "forest").root_labels == (1, 2, 3)

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            validate(path_array(2), "graph")


class TestLeafSet:
    def test_path(self):
        assert leaf_set(adjacency(0, 1, 2, 3, 4)) == (1, 5)

    def test_star(self):
        assert leaf_set(adjacency(0, 1, 1, 1)) == (2, 3, 4)

    def test_single_edge_both_ends(self):
        # a degree-1 root is an end-vertex like any other
        assert leaf_set(adjacency(0, 1)) == (1, 2)

    def test_k1_is_its_own_leaf(self):
        assert leaf_set(adjacency(0)) == (1,)

    def test_rejects_forest(self):
        with pytest.raises(ValidationError):
            leaf_set(adjacency(0, 0))


class TestClosedNeighborhood:
    def test_path_endpoints(self):
        assert closed_neighborhood(adjacency(0, 1, 2, 3, 4), (1, 5)) == (1, 2, 4, 5)

    def test_star_leaf(self):
        assert closed_neighborhood(adjacency(0, 1, 1, 1), (2,)) == (1, 2)

    def test_empty(self):
        assert closed_neighborhood(adjacency(0, 1, 2), ()) == ()

    def test_out_of_range(self):
        with pytest.raises(ValidationError):
            closed_neighborhood(adjacency(0, 1), (3,))


def _adjacency_matrix(pa):
    m = [[False] * (pa.n + 1) for _ in range(pa.n + 1)]
    for i, p in enumerate(pa.parent):
        if p != 0:
            m[i + 1][p] = m[p][i + 1] = True
    return m


@pytest.mark.slow
def test_leaf_and_neighborhood_against_matrix_oracle_exhaustive():
    """Degree-1 detection and N[L] agree with a raw adjacency-matrix scan
    on every tree with up to 9 vertices."""
    for n in range(2, 10):
        for pa in enumerate_parent_arrays(n, "trees"):
            t = build_adjacency(pa)
            m = _adjacency_matrix(pa)
            leaves = leaf_set(t)
            assert leaves == tuple(
                v for v in range(1, n + 1) if sum(m[v]) == 1
            )
            leaf_flags = set(leaves)
            expected = tuple(
                v
                for v in range(1, n + 1)
                if v in leaf_flags
                or any(m[v][u] for u in leaf_flags)
            )
            assert closed_neighborhood(t, leaves) == expected


def test_build_adjacency_degrees():
    t = adjacency(0, 1, 1, 2, 2)
    assert t.degree == (2, 3, 1, 1, 1)
    assert t.children == ((2, 3), (4, 5), (), (), ())
