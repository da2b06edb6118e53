import random
from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidthom.braids import full_twist, is_trivial, pure_generator
from braidthom.diagrams import (
    Kind,
    braid_diagram,
    characters,
    classify,
    commutator,
    commutes,
    equal,
    identity,
    is_identity,
    x_ess,
)
from braidthom.gens import (
    GenSymbol,
    WordParseError,
    a,
    act,
    b,
    conjugator_search,
    eval_word,
    f_fixing_exactly,
    f_supported_on,
    fixes,
    format_word,
    generator,
    parse_word,
    relation_suite,
    relations,
    s,
    sigma_word_for,
    t,
    x,
)
from braidthom.sampling import SampleConfig, random_pbr, rng
from braidthom.trees import all_right_tree
from oracles import burau


class TestSymbols:
    @pytest.mark.parametrize(
        "kind, idx", [("x", (-1,)), ("sigma", (0,)), ("alpha", (2, 2)), ("beta", (3, 1)), ("gamma", (1,))]
    )
    def test_invalid(self, kind, idx):
        with pytest.raises(ValueError):
            GenSymbol(kind, idx)

    def test_parse_format(self):
        w = parse_word("x0 X1^-1 s2 t3 a1,2 b1,3^-1")
        assert format_word(w) == "x0 x1^-1 s2 t3 a1,2 b1,3^-1"

    @pytest.mark.parametrize("text, pos", [("x0 y1", 3), ("a2,1", 0), ("x0 s0", 3)])
    def test_parse_errors(self, text, pos):
        with pytest.raises(WordParseError) as exc:
            parse_word(text)
        assert exc.value.position == pos


class TestGenerators:
    def test_beta12(self):
        assert generator(b(1, 2)) == braid_diagram(all_right_tree(2), full_twist(2))

    def test_alpha12_is_sigma_squared(self):
        assert equal(generator(a(1, 2)), eval_word("s1 s1"))

    def test_classes(self):
        assert classify(generator(s(1))) == Kind.VBR
        assert classify(generator(a(1, 2))) == Kind.PBR
        assert classify(generator(x(3))) == Kind.FBR

    def test_sigma_layout(self):
        d = generator(s(3))
        assert d.strands == 5 and d.braid.letters == (3,)

    def test_tau_uses_last_strand(self):
        d = generator(t(2))
        assert d.strands == 3 and d.braid.letters == (2,)

    @pytest.mark.parametrize("j", range(2, 7))
    def test_alpha_beta_words(self, j):
        for i in range(1, j):
            for kind in (a, b):
                g = kind(i, j)
                assert equal(generator(g), eval_word(sigma_word_for(g)))
                assert equal(generator(g.inverse()), eval_word(sigma_word_for(g.inverse())))


class TestEval:
    def test_empty(self):
        assert eval_word("") == identity()

    def test_cancel(self):
        assert is_identity(eval_word("x0 x0^-1"))

    def test_d2_instance(self):
        assert equal(eval_word("t1 x0"), eval_word("s1 t2"))

    def test_d3_instance(self):
        assert equal(eval_word("t1"), eval_word("x0 t2 s1"))

    def test_a_instance(self):
        assert equal(eval_word("x1 x0"), eval_word("x0 x2"))

    def test_pbr_generated_by_conjugates(self):
        r = random.Random(7)
        gens_ = [a(i, j) for j in range(2, 5) for i in range(1, j)] + [b(i, j) for j in range(2, 5) for i in range(1, j)]
        for _ in range(20):
            w = []
            for _ in range(r.randint(1, 3)):
                c = tuple(x(r.randint(0, 3), r.choice((1, -1))) for _ in range(r.randint(0, 2)))
                g = r.choice(gens_)
                w += list(c) + [g if r.random() < 0.5 else g.inverse()] + [h.inverse() for h in reversed(c)]
            assert classify(eval_word(w)) in (Kind.PBR, Kind.IDENTITY)


class TestRelationSuites:
    def test_vbr_bound_six(self):
        rep = relation_suite("vbr", 6)
        assert rep.ok, [str(r) for r in rep.failed[:5]]

    def test_fbr_reversed_b_bound_six(self):
        rep = relation_suite("fbr", 6, reverse_b=True)
        assert rep.ok, [str(r) for r in rep.failed[:5]]

    def test_fbr_literal_failures_are_exactly_the_conjugation_families(self):
        rep = relation_suite("fbr", 5)
        bad_tags = {r.tag for r in rep.failed}
        assert bad_tags == {"(B2)", "(B3)", "(B4)", "(B6)", "(B7)", "(B8)"}
        for tag, (ok, total) in rep.by_tag().items():
            if tag not in bad_tags:
                assert ok == total, tag

    def test_literal_b2_is_false_in_the_braid_group(self):
        # an abstract identity in B_3, checked with Burau matrices (faithful on B_3)
        A12, A13, A23 = (pure_generator(3, i, j) for i, j in ((1, 2), (1, 3), (2, 3)))
        lit_l = A12.inverse() * A23 * A12
        lit_r = A13 * A23 * A13.inverse()
        assert burau(3, lit_l.letters) != burau(3, lit_r.letters)
        assert not is_trivial(lit_l * lit_r.inverse())
        rev_l = A12 * A23 * A12.inverse()
        rev_r = A13.inverse() * A23 * A13
        assert burau(3, rev_l.letters) == burau(3, rev_r.letters)

    def test_bound_too_small(self):
        with pytest.raises(ValueError):
            relation_suite("vbr", 2)

    def test_unknown(self):
        with pytest.raises(ValueError):
            relations("bv", 4)

    def test_catalog_covers_every_family(self):
        tags = {r.tag for r in relations("vbr", 4)}
        assert tags == {"(A)", "(b1)", "(b2)", "(b3)", "(b4)", "(c1)", "(c2)", "(c3)", "(c4)", "(d1)", "(d2)", "(d3)"}
        ftags = {r.tag for r in relations("fbr", 5)}
        assert ftags == {"(A)", "(C)"} | {f"(B{k})" for k in range(1, 9)} | {f"(D{k})" for k in range(1, 10)}


class TestSupportedElements:
    def test_whole_interval_is_x0(self):
        assert equal(f_supported_on(0, 1), generator(x(0)))

    def test_disjoint_commute(self):
        assert is_identity(commutator(f_supported_on(0, Q(1, 2)), f_supported_on(Q(1, 2), 1)))

    def test_degenerate(self):
        with pytest.raises(ValueError):
            f_supported_on(Q(1, 2), Q(1, 2))

    @given(st.integers(0, 15), st.integers(1, 16))
    def test_support_exact(self, u, w):
        lo, hi = Q(u, 16), Q(max(u + 1, w), 16)
        f = f_supported_on(lo, hi)
        assert classify(f) == Kind.FBR
        assert act(f, lo) == lo and act(f, hi) == hi
        for k in range(1, 64):
            p = Q(k, 64)
            assert (act(f, p) != p) == (lo < p < hi)

    @given(st.integers(1, 6), st.integers(2, 7))
    def test_interior_support_kills_phis(self, u, w):
        if w <= u:
            return
        assert characters(f_supported_on(Q(u, 8), Q(w, 8)))[:2] == (0, 0)

    def test_beta12_with_fixing_element(self):
        g = eval_word("b1,2")
        assert is_identity(commutator(f_supported_on(Q(1, 2), 1), g))

    def test_fixing_exactly(self):
        pts = [Q(1, 4), Q(5, 8)]
        h = f_fixing_exactly(pts)
        for k in range(1, 32):
            p = Q(k, 32)
            assert (act(h, p) == p) == (p in pts)


class TestCommutingCondition:
    @pytest.mark.parametrize("seed", range(10))
    def test_fixing_xess_commutes(self, seed):
        r = rng(seed)
        g = random_pbr(r, SampleConfig(max_strands=5), min_strands=2)
        pts = x_ess(g)
        f = f_fixing_exactly(pts)
        assert fixes(f, pts)
        assert commutes(f, g)

    @pytest.mark.parametrize("seed", range(8))
    def test_conjugator_search(self, seed):
        r = rng(100 + seed)
        g = random_pbr(r, SampleConfig(max_strands=4), min_strands=2)
        f = eval_word(" ".join(f"x{r.randint(0, 3)}" + r.choice(("", "^-1")) for _ in range(r.randint(1, 3))))
        if is_identity(f):
            return
        h = conjugator_search(g, f)
        assert h is not None
        assert commutes(h, g) and not commutes(h, f)
