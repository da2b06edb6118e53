from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidthom.trees import (
    LEAF,
    DyadicInterval,
    Forest,
    TreeParseError,
    all_right_tree,
    all_trees,
    attach,
    attach_caret,
    common_refinement,
    forest_between,
    parse_tree,
    refines,
    serialize_tree,
    tree_metrics,
    tree_with_breakpoints,
    union_tree,
)
from oracles import breakpoint_union, leaf_intervals
from strategies import trees


def iv(a, b):
    return (Q(a), Q(b))


class TestParsing:
    def test_leaf(self):
        t = parse_tree("•")
        assert t.is_leaf and t.leaf_count == 1

    def test_left_caret(self):
        t = parse_tree("((••)•)")
        assert (t.leaf_count, t.left_depth, t.right_depth) == (3, 2, 1)

    def test_round_trip_literal(self):
        assert serialize_tree(parse_tree("(•(••))")) == "(•(••))"

    def test_ascii_alias_and_whitespace(self):
        assert parse_tree(" ( . ( . . ) ) ") == parse_tree("(•(••))")

    @pytest.mark.parametrize(
        "text, pos",
        [("(••", 3), ("(•)", 2), ("••", 1), ("(•x)", 2), ("", 0)],
    )
    def test_errors_report_position(self, text, pos):
        with pytest.raises(TreeParseError) as exc:
            parse_tree(text)
        assert exc.value.position == pos

    @given(trees())
    def test_round_trip(self, t):
        assert parse_tree(serialize_tree(t)) == t


class TestMetrics:
    def test_trivial(self):
        assert tree_metrics(LEAF) == (1, 0, 0, [DyadicInterval(0, 0)])

    def test_left_caret(self):
        n, L, R, ivs = tree_metrics(parse_tree("((••)•)"))
        assert (n, L, R) == (3, 2, 1)
        assert [(i.left, i.right) for i in ivs] == [iv(0, "1/4"), iv("1/4", "1/2"), iv("1/2", 1)]

    def test_all_right_four(self):
        n, L, R, ivs = tree_metrics(all_right_tree(4))
        assert (n, L, R) == (4, 1, 3)
        assert [(i.left, i.right) for i in ivs] == [
            iv(0, "1/2"), iv("1/2", "3/4"), iv("3/4", "7/8"), iv("7/8", 1)
        ]

    @given(trees())
    def test_intervals_partition(self, t):
        ivs = t.intervals()
        assert ivs[0].left == 0 and ivs[-1].right == 1
        assert all(a.right == b.left for a, b in zip(ivs, ivs[1:]))

    @given(trees())
    def test_intervals_match_oracle(self, t):
        assert [(i.left, i.right) for i in t.intervals()] == leaf_intervals(serialize_tree(t))

    def test_dyadic_interval_bounds(self):
        with pytest.raises(ValueError):
            DyadicInterval(4, 2)


class TestForests:
    def test_attach_single(self):
        assert serialize_tree(attach(parse_tree("(••)"), [1])) == "((••)•)"

    def test_attach_twice_on_leaf(self):
        assert serialize_tree(attach(LEAF, [1, 1])) == "((••)•)"

    def test_index_shift_rule(self):
        # λ2 ∪ λ1 = λ1 ∪ λ3 on two roots
        assert Forest.from_carets(2, [2, 1]) == Forest.from_carets(2, [1, 3])
        assert attach(parse_tree("(••)"), [2, 1]) == attach(parse_tree("(••)"), [1, 3])

    def test_caret_bound(self):
        with pytest.raises(ValueError):
            Forest.from_carets(2, [1, 4])

    def test_root_mismatch(self):
        with pytest.raises(ValueError):
            attach(parse_tree("(••)"), Forest.trivial(3))

    @given(st.integers(1, 4), st.lists(st.integers(0, 100), max_size=6))
    def test_normalized_carets_rebuild_forest(self, roots, raw):
        carets, leaves = [], roots
        for r in raw:
            carets.append(r % leaves + 1)
            leaves += 1
        f = Forest.from_carets(roots, carets)
        assert Forest.from_carets(roots, f.carets) == f
        assert f.size == len(carets)

    @given(trees(max_leaves=5), st.data())
    def test_swap_rule(self, t, data):
        # attaching at k then at m (m > k + 1 after the shift) equals m - 1 first, then k
        n = t.leaf_count
        k = data.draw(st.integers(1, n))
        m = data.draw(st.integers(k + 2, n + 1)) if k + 2 <= n + 1 else None
        if m is None:
            return
        assert attach(t, [k, m]) == attach(t, [m - 1, k])


class TestRefinement:
    def test_example(self):
        phi, psi = common_refinement(parse_tree("((••)•)"), parse_tree("(•(••))"))
        assert phi.carets == (3,) and psi.carets == (1,)
        assert serialize_tree(attach(parse_tree("((••)•)"), phi)) == "((••)(••))"

    @given(trees())
    def test_idempotent(self, t):
        phi, psi = common_refinement(t, t)
        assert phi.size == psi.size == 0

    @given(trees())
    def test_from_leaf(self, t):
        phi, psi = common_refinement(LEAF, t)
        assert attach(LEAF, phi) == t and psi.size == 0

    @given(trees(), trees())
    def test_common_and_matches_breakpoint_union(self, t, s):
        phi, psi = common_refinement(t, s)
        u = attach(t, phi)
        assert u == attach(s, psi)
        assert u.breakpoints() == breakpoint_union(serialize_tree(t), serialize_tree(s))

    def test_minimal_exhaustive(self):
        small = [t for n in range(1, 7) for t in all_trees(n)]
        for t in small:
            for s in small:
                u = union_tree(t, s)
                assert refines(u, t) and refines(u, s)
                smaller = [w for w in small if w.leaf_count < u.leaf_count]
                assert not any(refines(w, t) and refines(w, s) for w in smaller)

    def test_forest_between_rejects_non_refinement(self):
        with pytest.raises(ValueError):
            forest_between(parse_tree("((••)•)"), parse_tree("(•(••))"))

    def test_tree_with_breakpoints(self):
        t = tree_with_breakpoints([Q(1, 4), Q(3, 4)])
        assert serialize_tree(t) == "((••)(••))"
        with pytest.raises(ValueError):
            tree_with_breakpoints([Q(1, 3)])

    def test_catalan_counts(self):
        assert [len(all_trees(n)) for n in range(1, 7)] == [1, 1, 2, 5, 14, 42]

    @given(trees(), st.data())
    def test_attach_caret_adds_leaf(self, t, data):
        k = data.draw(st.integers(1, t.leaf_count))
        u = attach_caret(t, k)
        assert u.leaf_count == t.leaf_count + 1 and refines(u, t)
