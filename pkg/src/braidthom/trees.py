"""Rooted binary trees, forests of carets, and dyadic subdivisions of [0, 1].

A tree is either a leaf or an ordered pair of subtrees. Its leaves, read left
to right, index the standard dyadic subdivision of the unit interval obtained
by halving at every internal node. Forests are lists of trees hung on the
leaves of another tree; they are how diagrams get expanded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence

LEAF_CHARS = ("•", ".")


class TreeParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class Tree:
    """A rooted binary tree; ``left is right is None`` for a leaf."""

    left: Tree | None = None
    right: Tree | None = None

    def __post_init__(self):
        if (self.left is None) != (self.right is None):
            raise ValueError("a tree node has either zero or two children")

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @cached_property
    def leaf_count(self) -> int:
        if self.is_leaf:
            return 1
        return self.left.leaf_count + self.right.leaf_count

    @cached_property
    def left_depth(self) -> int:
        """Length of the path from the root to the leftmost leaf."""
        return 0 if self.is_leaf else 1 + self.left.left_depth

    @cached_property
    def right_depth(self) -> int:
        return 0 if self.is_leaf else 1 + self.right.right_depth

    def __str__(self) -> str:
        return serialize_tree(self)

    def __repr__(self) -> str:
        return f"Tree({serialize_tree(self)!r})"

    def leaf_depths(self) -> list[int]:
        if self.is_leaf:
            return [0]
        return [d + 1 for d in self.left.leaf_depths() + self.right.leaf_depths()]

    def intervals(self) -> list[DyadicInterval]:
        return list(_intervals(self, DyadicInterval(0, 0)))

    def breakpoints(self) -> list[Fraction]:
        """Interior endpoints of the leaf subdivision, in increasing order."""
        return [iv.right for iv in self.intervals()[:-1]]

    def carets(self) -> int:
        return self.leaf_count - 1

    def subtree_left(self) -> Tree:
        if self.is_leaf:
            raise ValueError("the trivial tree has no left subtree")
        return self.left

    def subtree_right(self) -> Tree:
        if self.is_leaf:
            raise ValueError("the trivial tree has no right subtree")
        return self.right


LEAF = Tree()
CARET = Tree(LEAF, LEAF)


def node(left: Tree, right: Tree) -> Tree:
    return Tree(left, right)


def all_right_tree(n: int) -> Tree:
    """The n-leaf tree whose carets hang successively on right leaves."""
    if n < 1:
        raise ValueError("a tree has at least one leaf")
    t = LEAF
    for _ in range(n - 1):
        t = Tree(LEAF, t)
    return t


def all_left_tree(n: int) -> Tree:
    if n < 1:
        raise ValueError("a tree has at least one leaf")
    t = LEAF
    for _ in range(n - 1):
        t = Tree(t, LEAF)
    return t


# -- text format ------------------------------------------------------------


def serialize_tree(t: Tree) -> str:
    out: list[str] = []
    stack: list[Tree | str] = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
        elif item.is_leaf:
            out.append("•")
        else:
            out.append("(")
            stack.extend((")", item.right, item.left))
    return "".join(out)


def parse_tree(text: str) -> Tree:
    """Parse ``tree := "•" | "(" tree tree ")"``; whitespace is ignored, "." aliases "•"."""
    tokens = [(i, c) for i, c in enumerate(text) if not c.isspace()]
    pos = 0

    def parse() -> Tree:
        nonlocal pos
        if pos >= len(tokens):
            raise TreeParseError("unexpected end of input", len(text))
        i, c = tokens[pos]
        if c in LEAF_CHARS:
            pos += 1
            return LEAF
        if c == "(":
            pos += 1
            left = parse()
            right = parse()
            if pos >= len(tokens):
                raise TreeParseError("expected ')'", len(text))
            j, d = tokens[pos]
            if d != ")":
                raise TreeParseError(f"expected ')' but found {d!r}", j)
            pos += 1
            return Tree(left, right)
        raise TreeParseError(f"unexpected character {c!r}", i)

    tree = parse()
    if pos != len(tokens):
        raise TreeParseError("trailing characters", tokens[pos][0])
    return tree


# -- dyadic intervals -------------------------------------------------------


@dataclass(frozen=True, order=True)
class DyadicInterval:
    """The interval [num / 2**depth, (num + 1) / 2**depth]."""

    num: int
    depth: int

    def __post_init__(self):
        if self.depth < 0 or not 0 <= self.num < 2**self.depth:
            raise ValueError(f"not a dyadic subinterval of [0,1]: {self.num}/2^{self.depth}")

    @property
    def left(self) -> Fraction:
        return Fraction(self.num, 2**self.depth)

    @property
    def right(self) -> Fraction:
        return Fraction(self.num + 1, 2**self.depth)

    @property
    def length(self) -> Fraction:
        return Fraction(1, 2**self.depth)

    def halves(self) -> tuple[DyadicInterval, DyadicInterval]:
        return (
            DyadicInterval(2 * self.num, self.depth + 1),
            DyadicInterval(2 * self.num + 1, self.depth + 1),
        )

    def __str__(self) -> str:
        return f"[{self.left},{self.right}]"


def _intervals(t: Tree, iv: DyadicInterval) -> Iterator[DyadicInterval]:
    if t.is_leaf:
        yield iv
        return
    lo, hi = iv.halves()
    yield from _intervals(t.left, lo)
    yield from _intervals(t.right, hi)


def is_dyadic(x: Fraction) -> bool:
    d = Fraction(x).denominator
    return d & (d - 1) == 0


def tree_with_breakpoints(points: Iterable[Fraction]) -> Tree:
    """Smallest tree whose leaf subdivision has every given point as an endpoint."""
    pts = sorted({Fraction(p) for p in points})
    for p in pts:
        if not (0 <= p <= 1 and is_dyadic(p)):
            raise ValueError(f"{p} is not a dyadic point of [0,1]")
    inner = [p for p in pts if 0 < p < 1]

    def build(lo: Fraction, hi: Fraction, ps: list[Fraction]) -> Tree:
        if not ps:
            return LEAF
        mid = (lo + hi) / 2
        return Tree(
            build(lo, mid, [p for p in ps if p < mid]),
            build(mid, hi, [p for p in ps if p > mid]),
        )

    return build(Fraction(0), Fraction(1), inner)


def tree_metrics(t: Tree) -> tuple[int, int, int, list[DyadicInterval]]:
    return t.leaf_count, t.left_depth, t.right_depth, t.intervals()


# -- forests and caret attachment --------------------------------------------


@dataclass(frozen=True)
class Forest:
    """An ordered forest: one tree per root.

    Caret sequences ``λ_{k1} ∪ ... ∪ λ_{kr}`` are converted on construction,
    so two sequences describing the same forest give equal ``Forest`` values.
    """

    trees: tuple[Tree, ...]

    @classmethod
    def trivial(cls, roots: int) -> Forest:
        return cls((LEAF,) * roots)

    @classmethod
    def from_carets(cls, roots: int, carets: Sequence[int]) -> Forest:
        if roots < 1:
            raise ValueError("a forest needs at least one root")
        # each leaf of the growing forest remembers (root index, path)
        forest = [LEAF] * roots
        leaves: list[tuple[int, tuple[int, ...]]] = [(r, ()) for r in range(roots)]
        for step, k in enumerate(carets):
            if not 1 <= k <= len(leaves):
                raise ValueError(
                    f"caret {step + 1} attaches at leaf {k}, but only {len(leaves)} leaves exist"
                )
            r, path = leaves[k - 1]
            forest[r] = _graft(forest[r], path, CARET)
            leaves[k - 1 : k] = [(r, path + (0,)), (r, path + (1,))]
        return cls(tuple(forest))

    @property
    def roots(self) -> int:
        return len(self.trees)

    @property
    def leaf_count(self) -> int:
        return sum(t.leaf_count for t in self.trees)

    @property
    def size(self) -> int:
        return self.leaf_count - self.roots

    @cached_property
    def carets(self) -> tuple[int, ...]:
        """Normalized caret sequence: roots left to right, each tree in preorder."""
        seq: list[int] = []
        offset = 0

        def walk(t: Tree, leaf_pos: int) -> int:
            # leaf_pos: current index (1-based) of the leaf this subtree hangs from
            if t.is_leaf:
                return 1
            seq.append(leaf_pos)
            width_left = walk(t.left, leaf_pos)
            width_right = walk(t.right, leaf_pos + width_left)
            return width_left + width_right

        for t in self.trees:
            offset += walk(t, offset + 1)
        return tuple(seq)

    def __len__(self) -> int:
        return self.size


def _graft(t: Tree, path: tuple[int, ...], sub: Tree) -> Tree:
    if not path:
        if not t.is_leaf:
            raise ValueError("can only graft onto a leaf")
        return sub
    if path[0] == 0:
        return Tree(_graft(t.left, path[1:], sub), t.right)
    return Tree(t.left, _graft(t.right, path[1:], sub))


def attach_caret(t: Tree, k: int) -> Tree:
    """``t ∪ λ_k``: hang a caret on the k-th leaf (1-based)."""
    if not 1 <= k <= t.leaf_count:
        raise ValueError(f"leaf index {k} out of range 1..{t.leaf_count}")

    def go(s: Tree, k: int) -> Tree:
        if s.is_leaf:
            return CARET
        nl = s.left.leaf_count
        if k <= nl:
            return Tree(go(s.left, k), s.right)
        return Tree(s.left, go(s.right, k - nl))

    return go(t, k)


def attach(t: Tree, f: Forest | Sequence[int]) -> Tree:
    """``t ∪ Φ``; a bare caret sequence is read as a forest on t's leaves."""
    if not isinstance(f, Forest):
        f = Forest.from_carets(t.leaf_count, f)
    if f.roots != t.leaf_count:
        raise ValueError(f"forest has {f.roots} roots but the tree has {t.leaf_count} leaves")
    it = iter(f.trees)

    def go(s: Tree) -> Tree:
        if s.is_leaf:
            return next(it)
        left = go(s.left)
        return Tree(left, go(s.right))

    return go(t)


def forest_between(t: Tree, u: Tree) -> Forest:
    """The forest Φ with ``t ∪ Φ = u``; raises if u does not refine t."""
    out: list[Tree] = []

    def go(s: Tree, v: Tree) -> None:
        if s.is_leaf:
            out.append(v)
            return
        if v.is_leaf:
            raise ValueError(f"{serialize_tree(u)} does not refine {serialize_tree(t)}")
        go(s.left, v.left)
        go(s.right, v.right)

    go(t, u)
    return Forest(tuple(out))


def refines(u: Tree, t: Tree) -> bool:
    if t.is_leaf:
        return True
    if u.is_leaf:
        return False
    return refines(u.left, t.left) and refines(u.right, t.right)


def union_tree(t: Tree, s: Tree) -> Tree:
    """Minimal common refinement (leafwise union of the two subdivisions)."""
    if t.is_leaf:
        return s
    if s.is_leaf:
        return t
    return Tree(union_tree(t.left, s.left), union_tree(t.right, s.right))


def common_refinement(t: Tree, s: Tree) -> tuple[Forest, Forest]:
    u = union_tree(t, s)
    return forest_between(t, u), forest_between(s, u)


def all_trees(n: int) -> list[Tree]:
    """Every tree with exactly n leaves (Catalan many)."""
    return list(_all_trees(n))


def _all_trees(n: int) -> Iterator[Tree]:
    if n == 1:
        yield LEAF
        return
    for k in range(1, n):
        for a in _all_trees(k):
            for b in _all_trees(n - k):
                yield Tree(a, b)
