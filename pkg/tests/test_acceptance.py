"""Acceptance suite: one test and one printed PASS/FAIL line per criterion.

Sampled criteria draw from ``braidthom.sampling.rng()``, so ``BRAIDTHOM_SEED``
fixes every sample (default 0).
"""

import time
from fractions import Fraction as Q

import pytest

from braidthom.bns import builtin_witnesses, duality_matrix
from braidthom.braids import (
    BraidWord,
    braid_equal,
    clone,
    full_twist,
    is_central,
    is_m_loose,
    is_trivial,
    winding,
)
from braidthom.diagrams import (
    Diagram,
    characters,
    classify,
    commutator,
    commutes,
    delta,
    equal,
    in_fbr,
    in_pbr,
    is_identity,
    multiply,
    phi_left,
    x_ess,
)
from braidthom.gens import a, b, conjugator_search, eval_word, f_supported_on, gaps, generator, relation_suite
from braidthom.quotient import WindingVector, ab_equal, ab_multiply, clone_basis, coherence_check, quotient_map
from braidthom.sampling import (
    SampleConfig,
    random_expansions,
    random_fbr,
    random_pbr,
    random_pure_braid,
    random_tree,
    random_vbr,
    rng,
)
from braidthom.trees import all_trees, parse_tree
from oracles import trivial_class_b3, words

SAMPLE4 = Diagram(parse_tree("((•(••))•)"), BraidWord(4, (-1, 2, 3, 3, -2, -1)), parse_tree("(((••)•)•)"))
IDENTITY4 = [[int(i == j) for j in range(4)] for i in range(4)]


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\n[criterion {n}] {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, detail

    return emit


def test_criterion_01_presentation_suites(report):
    t0 = time.perf_counter()
    vbr = relation_suite("vbr", 6)
    fbr = relation_suite("fbr", 6)
    elapsed = time.perf_counter() - t0
    n_v, n_f = len(vbr.results), len(fbr.results)
    failing_tags = sorted({r.tag for r in fbr.failed})
    ok = vbr.ok and fbr.ok and elapsed < 120
    report(
        1,
        ok,
        f"vbr {vbr.passed}/{n_v}, fbr {fbr.passed}/{n_f} in {elapsed:.1f}s; "
        f"failing fbr families {failing_tags}; all pass when read with reverse_b=True",
    )


def test_criterion_02_duality_matrix(report):
    m = duality_matrix()
    report(2, m == IDENTITY4, f"matrix {m}; the x_1^-1 column pairs with phi1 at -1")


def test_criterion_03_reference_elements(report):
    checks = {
        "sample characters": characters(SAMPLE4) == (1, 0, 1, -1),
        "[x1, b12] = 1": is_identity(commutator(eval_word("x1"), eval_word("b1,2"))),
        "[x1, b23] != 1": not is_identity(commutator(eval_word("x1"), eval_word("b2,3"))),
        "xess(b12)": x_ess(eval_word("b1,2")) == [Q(1, 2)],
        "xess(b23)": x_ess(eval_word("b2,3")) == [Q(1, 2), Q(3, 4)],
    }
    bad = [k for k, v in checks.items() if not v]
    report(3, not bad, f"{len(checks) - len(bad)}/{len(checks)} reference checks" + (f", failing {bad}" if bad else ""))


def test_criterion_04_invariance(report):
    r = rng()
    cfg = SampleConfig()
    failures = 0
    for k in range(200):
        d = (random_vbr, random_fbr, random_pbr)[k % 3](r, cfg)
        e = random_expansions(r, d, r.randint(0, cfg.max_expansions))
        same = classify(e) == classify(d) and equal(e, d)
        if same and in_fbr(d):
            same = characters(e) == characters(d)
        if same and in_pbr(d):
            same = x_ess(e) == x_ess(d)
        failures += not same
    report(4, failures == 0, f"200 diagrams, {failures} failures")


def test_criterion_05_homomorphisms(report):
    r = rng()
    cfg = SampleConfig(max_strands=4)
    bad = {"characters": 0, "cloning": 0, "quotient": 0, "phi_L": 0}
    for _ in range(100):
        g, h = random_fbr(r, cfg), random_fbr(r, cfg)
        gh = multiply(g, h)
        if characters(gh) != tuple(x + y for x, y in zip(characters(g), characters(h))):
            bad["characters"] += 1
        if not ab_equal(quotient_map(gh), ab_multiply(quotient_map(g), quotient_map(h))):
            bad["quotient"] += 1
        n = r.randint(1, 4)
        p, q = random_pure_braid(r, n, 2), random_pure_braid(r, n, 2)
        k = r.randint(1, n)
        if not braid_equal(clone(p * q, k), clone(p, k) * clone(q, k)):
            bad["cloning"] += 1
        u, v = random_pbr(r, cfg, min_strands=2), random_pbr(r, cfg, min_strands=2)
        if not equal(phi_left(multiply(u, v)), multiply(phi_left(u), phi_left(v))):
            bad["phi_L"] += 1
    report(5, not any(bad.values()), f"100 pairs per map, failures {bad}")


def _random_fixer(r, points):
    out = eval_word("")
    for lo, hi in gaps(points):
        for _ in range(r.randint(0, 2)):
            d = r.randint(0, 2)
            step = (hi - lo) / 2**d
            u = r.randrange(2**d)
            v = r.randint(u + 1, 2**d)
            out = multiply(out, f_supported_on(lo + u * step, lo + v * step))
    return out


def test_criterion_06_commuting_condition(report):
    r = rng()
    cfg = SampleConfig(max_strands=4)
    noncommuting = 0
    for _ in range(50):
        g = random_pbr(r, cfg, min_strands=2)
        f = _random_fixer(r, x_ess(g))
        noncommuting += not commutes(f, g)
    found = 0
    tried = 0
    while tried < 25:
        g = random_pbr(r, cfg, min_strands=2)
        f = eval_word(" ".join(f"x{r.randint(0, 3)}" + r.choice(("", "^-1")) for _ in range(r.randint(1, 3))))
        if is_identity(g) or is_identity(f):
            continue
        tried += 1
        h = conjugator_search(g, f)
        found += h is not None and commutes(h, g) and not commutes(h, f)
    ok = noncommuting == 0 and found == 25
    report(6, ok, f"50 fixing pairs, {noncommuting} non-commuting; conjugator found for {found}/25")


def test_criterion_07_loose_family(report):
    r = rng()
    bad = {"clone_and_forget": 0, "2-loose vs winding": 0, "brunnian": 0, "delta": 0}
    for _ in range(100):
        n = r.randint(1, 4)
        p = random_pure_braid(r, n, r.randint(0, 3))
        if r.random() < 0.5 and n >= 2:
            q = random_pure_braid(r, n, 2)
            p = p * q * p.inverse() * q.inverse()
        m, k = r.randint(1, n), r.randint(1, n)
        if is_m_loose(p, m) != is_m_loose(clone(p, k), m):
            bad["clone_and_forget"] += 1
    for _ in range(100):
        p = random_pure_braid(r, 3, r.randint(0, 4))
        if r.random() < 0.3:
            q = random_pure_braid(r, 3, 2)
            p = p * q * p.inverse() * q.inverse()
        if is_m_loose(p, 2) != (not any(winding(p).vector())):
            bad["2-loose vs winding"] += 1
    w = BraidWord(3, (1, -2) * 3)
    if not (is_m_loose(w, 2) and not is_trivial(w)):
        bad["brunnian"] += 1
    for n in range(2, 7):
        for t in all_trees(n):
            if characters(delta(t))[2:] != (1, n - 1):
                bad["delta"] += 1
    report(7, not any(bad.values()), f"failures {bad}")


def test_criterion_08_quotient_naturality(report):
    checked = failures = 0
    for letters in words((1, -1, 2, -2), 4):
        p = BraidWord(3, letters)
        if not p.is_pure:
            continue
        v = WindingVector.from_dict(3, winding(p).pair_windings)
        for k in (1, 2, 3):
            c = clone(p, k)
            checked += 1
            failures += WindingVector.from_dict(4, winding(c).pair_windings) != clone_basis(v, k)
    report(8, failures == 0 and checked > 0, f"{checked} (p, k) instances, {failures} failures")


def test_criterion_09_non_hopfian(report):
    gens_ = [g(i, j) for g in (a, b) for j in range(2, 6) for i in range(1, j)]
    survivors = [str(g) for g in gens_ if not is_identity(phi_left(generator(g)))]
    r = rng()
    trees = [random_tree(r, r.randint(2, 7)) for _ in range(20)]
    bad_delta = sum(not equal(phi_left(delta(t)), delta(t.left)) for t in trees)
    ok = not survivors and bad_delta == 0
    report(9, ok, f"{len(gens_)} generators killed except {survivors}; delta on 20 trees, {bad_delta} failures")


def test_criterion_10_bns_witnesses(report):
    rep = builtin_witnesses(6)
    center = coherence_check(lambda n, p: is_central(p), [full_twist(2), full_twist(3)])
    ok = rep.ok and not center.coherent
    cases = ", ".join(f"{c.label}: {'pass' if c.ok else 'FAIL'}" for c in rep.cases)
    report(10, ok, f"{cases}; center family: {center.summary()}")


def test_criterion_11_oracle(report):
    trivial = trivial_class_b3(8)
    words4 = list(words((1, -1, 2, -2), 4))
    mismatches = [w for w in words4 if is_trivial(BraidWord(3, w)) != (w in trivial)]
    report(11, not mismatches, f"{len(words4)} words, {len(mismatches)} disagreements")
