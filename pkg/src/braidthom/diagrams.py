"""Braided paired tree diagrams: the elements of Vbr.

A diagram ``(top, braid, bottom)`` is drawn with the splits of ``top`` above,
the braid in the middle and the merges of ``bottom`` below. ``g * h`` stacks
g above h. Strand k of the braid ends at leaf k of ``bottom``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .braids import (
    BraidError,
    BraidWord,
    braid_equal,
    clone,
    delete_strands,
    format_braid,
    full_twist,
    is_trivial,
    parse_braid,
    winding,
)
from .trees import (
    LEAF,
    Tree,
    attach_caret,
    forest_between,
    parse_tree,
    serialize_tree,
    union_tree,
)


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class Diagram:
    top: Tree
    braid: BraidWord
    bottom: Tree

    def __post_init__(self):
        n = self.braid.strands
        if self.top.leaf_count != n or self.bottom.leaf_count != n:
            raise DiagramError(
                f"leaf counts {self.top.leaf_count}/{self.bottom.leaf_count} "
                f"do not match {n} strands"
            )

    @property
    def strands(self) -> int:
        return self.braid.strands

    def __mul__(self, other: Diagram) -> Diagram:
        return multiply(self, other)

    def __invert__(self) -> Diagram:
        return invert(self)

    def __pow__(self, k: int) -> Diagram:
        out = identity()
        base = self if k >= 0 else invert(self)
        for _ in range(abs(k)):
            out = multiply(out, base)
        return out

    def __str__(self) -> str:
        return format_diagram(self)


def identity(tree: Tree = LEAF) -> Diagram:
    return Diagram(tree, BraidWord.identity(tree.leaf_count), tree)


def braid_diagram(tree: Tree, braid: BraidWord) -> Diagram:
    return Diagram(tree, braid, tree)


def tree_pair(top: Tree, bottom: Tree) -> Diagram:
    """An element of F: no braiding."""
    return Diagram(top, BraidWord.identity(top.leaf_count), bottom)


def format_diagram(d: Diagram) -> str:
    return f"{serialize_tree(d.top)}|{format_braid(d.braid)}|{serialize_tree(d.bottom)}"


def parse_diagram(text: str) -> Diagram:
    parts = text.split("|")
    if len(parts) != 3:
        raise DiagramError("a diagram is written 'top|braid|bottom'")
    top, bottom = parse_tree(parts[0]), parse_tree(parts[2])
    try:
        braid = parse_braid(parts[1], None if ":" in parts[1] else top.leaf_count)
    except BraidError as exc:
        raise DiagramError(str(exc)) from None
    return Diagram(top, braid, bottom)


# -- expansion and reduction -----------------------------------------------------


def expand(d: Diagram, k: int) -> Diagram:
    """Add a caret at bottom leaf k and the matching top leaf, cloning strand k."""
    n = d.strands
    if not 1 <= k <= n:
        raise DiagramError(f"expansion index {k} out of range 1..{n}")
    top_leaf = d.braid.permutation[k - 1]
    return Diagram(attach_caret(d.top, top_leaf), clone(d.braid, k), attach_caret(d.bottom, k))


def expand_top(d: Diagram, j: int) -> Diagram:
    """Expand at the top leaf j."""
    if not 1 <= j <= d.strands:
        raise DiagramError(f"expansion index {j} out of range 1..{d.strands}")
    return expand(d, d.braid.permutation.index(j) + 1)


def expand_bottom_to(d: Diagram, tree: Tree) -> Diagram:
    for k in forest_between(d.bottom, tree).carets:
        d = expand(d, k)
    return d


def expand_top_to(d: Diagram, tree: Tree) -> Diagram:
    for j in forest_between(d.top, tree).carets:
        d = expand_top(d, j)
    return d


def _caret_leaves(t: Tree) -> set[int]:
    """Leaf indices k such that leaves k, k+1 form a caret."""
    out: set[int] = set()

    def walk(s: Tree, offset: int) -> None:
        if s.is_leaf:
            return
        if s.left.is_leaf and s.right.is_leaf:
            out.add(offset + 1)
            return
        walk(s.left, offset)
        walk(s.right, offset + s.left.leaf_count)

    walk(t, 0)
    return out


def _collapse_caret(t: Tree, k: int) -> Tree:
    def go(s: Tree, k: int) -> Tree:
        if s.left.is_leaf and s.right.is_leaf and k == 1:
            return LEAF
        nl = s.left.leaf_count
        if k < nl:
            return Tree(go(s.left, k), s.right)
        return Tree(s.left, go(s.right, k - nl))

    return go(t, k)


def strands_are_clones(b: BraidWord, k: int) -> bool:
    """Whether the strands at bottom positions k and k + 1 are parallel clones."""
    n = b.strands
    top_of = b.permutation
    if top_of[k] != top_of[k - 1] + 1:
        return False
    parent = delete_strands(b, [i for i in range(1, n + 1) if i != k + 1])
    return braid_equal(b, clone(parent, k))


def reduction_sites(d: Diagram) -> list[int]:
    top_carets = _caret_leaves(d.top)
    sites = []
    for k in sorted(_caret_leaves(d.bottom)):
        j = d.braid.permutation[k - 1]
        if j in top_carets and strands_are_clones(d.braid, k):
            sites.append(k)
    return sites


def reduce_at(d: Diagram, k: int) -> Diagram:
    if k not in reduction_sites(d):
        raise DiagramError(f"no reduction at leaf {k}")
    j = d.braid.permutation[k - 1]
    parent = delete_strands(d.braid, [i for i in range(1, d.strands + 1) if i != k + 1])
    return Diagram(_collapse_caret(d.top, j), parent, _collapse_caret(d.bottom, k))


def reduce(d: Diagram, pick: str = "first") -> Diagram:
    """Undo expansions until none applies. ``pick`` chooses the site: "first" or "last"."""
    while True:
        sites = reduction_sites(d)
        if not sites:
            return d
        d = reduce_at(d, sites[0] if pick == "first" else sites[-1])


# -- group operations -------------------------------------------------------------


def invert(d: Diagram) -> Diagram:
    return Diagram(d.bottom, d.braid.inverse(), d.top)


def multiply(g: Diagram, h: Diagram) -> Diagram:
    """``g * h``: g stacked above h, g's merges meeting h's splits."""
    u = union_tree(g.bottom, h.top)
    g2 = expand_bottom_to(g, u)
    h2 = expand_top_to(h, u)
    return Diagram(g2.top, g2.braid * h2.braid, h2.bottom)


def product(ds: Sequence[Diagram]) -> Diagram:
    out = identity()
    for d in ds:
        out = multiply(out, d)
    return out


def commutator(g: Diagram, h: Diagram) -> Diagram:
    """[g, h] = g h g^-1 h^-1."""
    return product([g, h, invert(g), invert(h)])


def is_identity(d: Diagram) -> bool:
    return d.top == d.bottom and is_trivial(d.braid)


def equal(g: Diagram, h: Diagram) -> bool:
    return is_identity(multiply(g, invert(h)))


def commutes(g: Diagram, h: Diagram) -> bool:
    return equal(multiply(g, h), multiply(h, g))


# -- classification and characters --------------------------------------------------


class Kind(str, Enum):
    IDENTITY = "identity"
    PBR = "Pbr"
    FBR = "Fbr"
    VBR = "Vbr"

    def __str__(self) -> str:
        return self.value


def classify(d: Diagram) -> Kind:
    if not d.braid.is_pure:
        return Kind.VBR
    if d.top != d.bottom:
        return Kind.FBR
    if is_trivial(d.braid):
        return Kind.IDENTITY
    return Kind.PBR


def in_fbr(d: Diagram) -> bool:
    return d.braid.is_pure


def in_pbr(d: Diagram) -> bool:
    return d.braid.is_pure and d.top == d.bottom


def characters(d: Diagram) -> tuple[int, int, int, int]:
    """(phi0, phi1, omega0, omega1) of an element of Fbr."""
    if not d.braid.is_pure:
        raise DiagramError("characters are defined on Fbr (pure braids) only")
    w = winding(d.braid)
    return (
        d.bottom.left_depth - d.top.left_depth,
        d.bottom.right_depth - d.top.right_depth,
        w.omega0,
        w.omega1,
    )


def x_ess(d: Diagram) -> list[Fraction]:
    """Essential interior endpoints of an element of Pbr, in increasing order."""
    if not in_pbr(d):
        raise DiagramError("the essential set is defined for elements of Pbr only")
    points = d.top.breakpoints()
    return [x for k, x in enumerate(points, start=1) if not strands_are_clones(d.braid, k)]


def delta(t: Tree) -> Diagram:
    """(T, Delta_n, T): the full twist on the leaves of t."""
    return braid_diagram(t, full_twist(t.leaf_count))


def phi_left(d: Diagram) -> Diagram:
    """Restrict an element (T, p, T) of Pbr to the left subtree of T."""
    if not in_pbr(d):
        raise DiagramError("phi_L is defined on Pbr only")
    if d.top.is_leaf:
        raise DiagramError("phi_L needs a non-trivial tree")
    left = d.top.left
    return braid_diagram(left, delete_strands(d.braid, range(1, left.leaf_count + 1)))
