"""Named generators of Vbr and Fbr, words in them, and the relation catalogs.

x_i:      the standard generators of F (no braiding).
s_i, t_i: one crossing on the all-right tree; t_i uses the last strand.
a_{i,j}:  strand i goes around strand j on the all-right tree with j+1 leaves.
b_{i,j}:  the same with j leaves, so the last strand is used.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator, Sequence

from .braids import BraidWord
from .diagrams import (
    Diagram,
    braid_diagram,
    equal,
    identity,
    invert,
    multiply,
    tree_pair,
)
from .trees import LEAF, Tree, all_right_tree, attach_caret, tree_with_breakpoints

KINDS = ("x", "sigma", "tau", "alpha", "beta")
_TOKEN_LETTER = {"x": "x", "sigma": "s", "tau": "t", "alpha": "a", "beta": "b"}
_LETTER_KIND = {v: k for k, v in _TOKEN_LETTER.items()}


class WordParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class GenSymbol:
    kind: str
    indices: tuple[int, ...]
    exponent: int = 1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.exponent not in (1, -1):
            raise ValueError("exponent must be +1 or -1")
        idx = self.indices
        if self.kind == "x":
            ok = len(idx) == 1 and idx[0] >= 0
        elif self.kind in ("sigma", "tau"):
            ok = len(idx) == 1 and idx[0] >= 1
        else:
            ok = len(idx) == 2 and 1 <= idx[0] < idx[1]
        if not ok:
            raise ValueError(f"invalid indices {idx} for {self.kind}")

    def inverse(self) -> GenSymbol:
        return GenSymbol(self.kind, self.indices, -self.exponent)

    def __str__(self) -> str:
        s = _TOKEN_LETTER[self.kind] + ",".join(map(str, self.indices))
        return s if self.exponent == 1 else s + "^-1"


def x(i: int, e: int = 1) -> GenSymbol:
    return GenSymbol("x", (i,), e)


def s(i: int, e: int = 1) -> GenSymbol:
    return GenSymbol("sigma", (i,), e)


def t(i: int, e: int = 1) -> GenSymbol:
    return GenSymbol("tau", (i,), e)


def a(i: int, j: int, e: int = 1) -> GenSymbol:
    return GenSymbol("alpha", (i, j), e)


def b(i: int, j: int, e: int = 1) -> GenSymbol:
    return GenSymbol("beta", (i, j), e)


Word = tuple[GenSymbol, ...]


def inverse_word(w: Sequence[GenSymbol]) -> Word:
    return tuple(g.inverse() for g in reversed(w))


def format_word(w: Sequence[GenSymbol]) -> str:
    return " ".join(str(g) for g in w)


_TOKEN_RE = re.compile(r"([xstab])(\d+(?:,\d+)?)(\^-1|\^1|\^\+1)?$")


def parse_word(text: str) -> Word:
    """Parse ``"x0 x1^-1 s1 t2 a1,2 b1,3"`` (case-insensitive)."""
    out = []
    for m in re.finditer(r"\S+", text):
        tok = m.group(0).lower()
        mt = _TOKEN_RE.match(tok)
        if not mt:
            raise WordParseError(f"bad generator token {m.group(0)!r}", m.start())
        kind = _LETTER_KIND[mt.group(1)]
        idx = tuple(int(v) for v in mt.group(2).split(","))
        e = -1 if mt.group(3) == "^-1" else 1
        try:
            out.append(GenSymbol(kind, idx, e))
        except ValueError as exc:
            raise WordParseError(str(exc), m.start()) from None
    return tuple(out)


# -- generators as diagrams ----------------------------------------------------


def _x_tree(i: int, tail: Tree) -> Tree:
    t_ = tail
    for _ in range(i):
        t_ = Tree(LEAF, t_)
    return t_


_X_TOP = Tree(Tree(LEAF, LEAF), LEAF)
_X_BOTTOM = Tree(LEAF, Tree(LEAF, LEAF))


@lru_cache(maxsize=None)
def _generator(kind: str, indices: tuple[int, ...]) -> Diagram:
    if kind == "x":
        (i,) = indices
        return tree_pair(_x_tree(i, _X_TOP), _x_tree(i, _X_BOTTOM))
    if kind == "sigma":
        (i,) = indices
        return braid_diagram(all_right_tree(i + 2), BraidWord(i + 2, (i,)))
    if kind == "tau":
        (i,) = indices
        return braid_diagram(all_right_tree(i + 1), BraidWord(i + 1, (i,)))
    i, j = indices
    up = tuple(range(i, j - 1))
    letters = up + (j - 1, j - 1) + tuple(-c for c in reversed(up))
    n = j + 1 if kind == "alpha" else j
    return braid_diagram(all_right_tree(n), BraidWord(n, letters))


def generator(g: GenSymbol) -> Diagram:
    d = _generator(g.kind, g.indices)
    return d if g.exponent == 1 else invert(d)


def eval_word(w: Sequence[GenSymbol] | str) -> Diagram:
    if isinstance(w, str):
        w = parse_word(w)
    out = identity()
    for g in w:
        out = multiply(out, generator(g))
    return out


def sigma_word_for(g: GenSymbol) -> Word:
    """alpha/beta rewritten in the sigma/tau generators."""
    i, j = g.indices
    last = s if g.kind == "alpha" else t
    w = tuple(s(k) for k in range(i, j - 1)) + (last(j - 1), last(j - 1))
    w = w + tuple(s(k, -1) for k in reversed(range(i, j - 1)))
    return w if g.exponent == 1 else inverse_word(w)


# -- relation catalogs ----------------------------------------------------------


@dataclass(frozen=True)
class Relation:
    tag: str
    indices: tuple[tuple[str, int], ...]
    lhs: Word
    rhs: Word

    def label(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.indices)
        return f"{self.tag} [{args}]"

    def __str__(self) -> str:
        return f"{self.label()}: {format_word(self.lhs)} = {format_word(self.rhs)}"


def _conj(g: GenSymbol) -> Callable[[Word], Word]:
    """Word for g^-1 w g."""
    return lambda w: (g.inverse(),) + tuple(w) + (g,)


def _rel(tag: str, idx: dict[str, int], lhs, rhs) -> Relation:
    return Relation(tag, tuple(idx.items()), tuple(lhs), tuple(rhs))


def vbr_relations(n: int) -> Iterator[Relation]:
    """Every instance of the Vbr relation families with free indices at most n."""
    yield from _relations_A(n)
    r = range(1, n + 1)
    for i in r:
        for j in r:
            if i <= j - 2:
                yield _rel("(b1)", {"i": i, "j": j}, [s(i), s(j)], [s(j), s(i)])
                yield _rel("(b3)", {"i": i, "j": j}, [s(i), t(j)], [t(j), s(i)])
    for i in r:
        yield _rel("(b2)", {"i": i}, [s(i), s(i + 1), s(i)], [s(i + 1), s(i), s(i + 1)])
        yield _rel("(b4)", {"i": i}, [s(i), t(i + 1), s(i)], [t(i + 1), s(i), t(i + 1)])
    for i in r:
        for j in r:
            if i < j:
                yield _rel("(c1)", {"i": i, "j": j}, [s(i), x(j)], [x(j), s(i)])
            if j <= i - 2:
                yield _rel("(c3)", {"i": i, "j": j}, [s(i), x(j)], [x(j), s(i + 1)])
                yield _rel("(d1)", {"i": i, "j": j}, [t(i), x(j)], [x(j), t(i + 1)])
    for i in r:
        yield _rel("(c2)", {"i": i}, [s(i), x(i)], [x(i - 1), s(i + 1), s(i)])
        yield _rel("(c4)", {"i": i}, [s(i + 1), x(i)], [x(i + 1), s(i + 1), s(i + 2)])
        yield _rel("(d2)", {"i": i}, [t(i), x(i - 1)], [s(i), t(i + 1)])
        yield _rel("(d3)", {"i": i}, [t(i)], [x(i - 1), t(i + 1), s(i)])


def _relations_A(n: int) -> Iterator[Relation]:
    for j in range(n + 1):
        for i in range(j):
            yield _rel("(A)", {"i": i, "j": j}, [x(j), x(i)], [x(i), x(j + 1)])


def fbr_relations(n: int, reverse_b: bool = False) -> Iterator[Relation]:
    """Every instance of the Fbr relation families with free indices at most n.

    With ``reverse_b`` the conjugation families (B2)-(B4), (B6)-(B8) are read
    with every word reversed, i.e. ``a_rs w a_rs^-1`` on the left. The tables
    as usually printed conjugate the other way, which is false for the
    elements a_{i,j} = s_i ... s_{j-1}^2 ... s_i^-1 (already in B_3).
    """
    yield from _relations_A(n)
    yield from _relations_B(n, reverse_b)
    yield from _relations_CD(n)


def _reversed(rel: Relation) -> Relation:
    return Relation(rel.tag, rel.indices, rel.lhs[::-1], rel.rhs[::-1])


def _relations_B(n: int, reverse_b: bool) -> Iterator[Relation]:
    for rel in _relations_B_printed(n):
        if reverse_b and rel.tag not in ("(B1)", "(B5)"):
            rel = _reversed(rel)
        yield rel


def _relations_B_printed(n: int) -> Iterator[Relation]:
    r = range(1, n + 1)
    quads = [(rr, ss, i, j) for rr in r for ss in r for i in r for j in r if rr < ss and i < j]
    for gen, tags in ((a, ("(B1)", "(B2)", "(B3)", "(B4)")), (b, ("(B5)", "(B6)", "(B7)", "(B8)"))):
        for rr, ss, i, j in quads:
            idx = {"r": rr, "s": ss, "i": i, "j": j}
            conj = _conj(a(rr, ss))
            lhs = conj([gen(i, j)])
            if ss < i or (i < rr and ss < j):
                yield _rel(tags[0], idx, lhs, [gen(i, j)])
            elif ss == i:
                yield _rel(tags[1], idx, lhs, [gen(rr, j), gen(i, j), gen(rr, j, -1)])
            elif rr == i and ss < j:
                c = (gen(i, j), gen(ss, j))
                yield _rel(tags[2], idx, lhs, c + (gen(i, j),) + inverse_word(c))
            elif rr < i < ss < j:
                c = (gen(rr, j), gen(ss, j), gen(rr, j, -1), gen(ss, j, -1))
                yield _rel(tags[3], idx, lhs, c + (gen(i, j),) + inverse_word(c))


def _relations_CD(n: int) -> Iterator[Relation]:
    r = range(1, n + 1)
    for i in r:
        for j in r:
            if i < j:
                yield _rel("(C)", {"i": i, "j": j}, [b(i, j)], [b(i, j + 1), a(i, j)])
    for k in r:
        for i in r:
            for j in r:
                if not i < j:
                    continue
                idx = {"i": i, "j": j, "k": k}
                for gen, off in ((a, 0), (b, 5)):
                    lhs = [gen(i, j), x(k - 1)]
                    tag = lambda m: f"(D{m + off})"
                    if k < i:
                        yield _rel(tag(1), idx, lhs, [x(k - 1), gen(i + 1, j + 1)])
                    elif k == i:
                        yield _rel(tag(2), idx, lhs, [x(k - 1), gen(i + 1, j + 1), gen(i, j + 1)])
                    elif k < j:
                        yield _rel(tag(3), idx, lhs, [x(k - 1), gen(i, j + 1)])
                    elif k == j and gen is a:
                        yield _rel(tag(4), idx, lhs, [x(k - 1), gen(i, j + 1), gen(i, j)])
                    elif k > j:
                        yield _rel(tag(5 if gen is a else 4), idx, lhs, [x(k - 1), gen(i, j)])


def relations(presentation: str, n: int, reverse_b: bool = False) -> list[Relation]:
    p = presentation.lower()
    if p == "vbr":
        return list(vbr_relations(n))
    if p == "fbr":
        return list(fbr_relations(n, reverse_b))
    raise ValueError(f"unknown presentation {presentation!r}; use 'vbr' or 'fbr'")


@dataclass
class RelationReport:
    presentation: str
    bound: int
    results: list[tuple[Relation, bool]]

    @property
    def passed(self) -> int:
        return sum(ok for _, ok in self.results)

    @property
    def failed(self) -> list[Relation]:
        return [rel for rel, ok in self.results if not ok]

    @property
    def ok(self) -> bool:
        return not self.failed

    def by_tag(self) -> dict[str, tuple[int, int]]:
        out: dict[str, tuple[int, int]] = {}
        for rel, ok in self.results:
            p, n = out.get(rel.tag, (0, 0))
            out[rel.tag] = (p + ok, n + 1)
        return out


def check_relation(rel: Relation) -> bool:
    return equal(eval_word(rel.lhs), eval_word(rel.rhs))


def relation_suite(presentation: str, n: int, reverse_b: bool = False) -> RelationReport:
    if n < 3:
        raise ValueError("the relation suite needs a bound of at least 3")
    rels = relations(presentation, n, reverse_b)
    return RelationReport(presentation.lower(), n, [(rel, check_relation(rel)) for rel in rels])


# -- elements of F with prescribed support ------------------------------------------


def f_supported_on(lo: Fraction, hi: Fraction) -> Diagram:
    """A braid-free element whose support is exactly the open interval (lo, hi).

    Takes a tree with lo and hi among its breakpoints and adds one caret on the
    first leaf inside [lo, hi] on top and one on the last leaf on the bottom;
    the induced map pushes every interior point of [lo, hi] to the right.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if not 0 <= lo < hi <= 1:
        raise ValueError(f"degenerate interval [{lo}, {hi}]")
    tree = tree_with_breakpoints([lo, hi])
    ivs = tree.intervals()
    first = next(k for k, iv in enumerate(ivs, start=1) if iv.left == lo)
    last = next(k for k, iv in enumerate(ivs, start=1) if iv.right == hi)
    if first == last:
        tree = attach_caret(tree, first)
        last = first + 1
    return tree_pair(attach_caret(tree, first), attach_caret(tree, last))


# -- elements of F with prescribed support ----------------------------------------


def act(f: Diagram, x: Fraction) -> Fraction:
    """Image of x under the induced PL map: top leaf intervals go to bottom leaf intervals."""
    if not f.braid.is_pure:
        raise ValueError("only elements of Fbr act on [0, 1]")
    x = Fraction(x)
    for src, dst in zip(f.top.intervals(), f.bottom.intervals()):
        if src.left <= x <= src.right:
            return dst.left + (x - src.left) * dst.length / src.length
    raise ValueError(f"{x} is not in [0, 1]")


def fixes(f: Diagram, points: Sequence[Fraction]) -> bool:
    return all(act(f, p) == p for p in points)


def gaps(points: Sequence[Fraction]) -> list[tuple[Fraction, Fraction]]:
    """Consecutive intervals cut out of [0, 1] by the given interior points."""
    cuts = [Fraction(0)] + sorted(Fraction(p) for p in points) + [Fraction(1)]
    return list(zip(cuts, cuts[1:]))


def f_fixing_exactly(points: Sequence[Fraction]) -> Diagram:
    """An element of F whose fixed points in (0, 1) are exactly the given dyadic points."""
    out = identity()
    for lo, hi in gaps(points):
        out = multiply(out, f_supported_on(lo, hi))
    return out


def supported_candidates(points: Sequence[Fraction], depth: int = 3) -> Iterator[Diagram]:
    """Elements supported in the gaps between ``points``, coarse ones first."""
    yield f_fixing_exactly(points)
    for d in range(depth + 1):
        for lo, hi in gaps(points):
            step = (hi - lo) / 2**d
            grid = [lo + step * m for m in range(2**d + 1)]
            for u in range(len(grid)):
                for v in range(u + 1, len(grid)):
                    if d and (u % 2 == 0 and v % 2 == 0):
                        continue  # already produced at a coarser depth
                    yield f_supported_on(grid[u], grid[v])


def conjugator_search(g: Diagram, f: Diagram, depth: int = 3) -> Diagram | None:
    """Some h in F with [h, g] = 1 and [h, f] != 1, or None if the search runs out.

    g must lie in Pbr; candidates are supported off X_ess(g), so they commute with g.
    """
    from .diagrams import commutes, x_ess

    points = x_ess(g)
    for h in supported_candidates(points, depth):
        if commutes(h, g) and not commutes(h, f):
            return h
    return None
