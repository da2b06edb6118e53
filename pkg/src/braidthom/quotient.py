"""The abelianized quotient of Fbr by its 2-loose subgroup.

A pure braid on n strands maps to its vector of pair windings in Z^(n choose 2).
Cloning strand k acts on that lattice by :func:`clone_basis`, so elements of the
quotient are triples ``(top, vector, bottom)`` that expand and multiply exactly
as diagrams do, with vectors in place of braids.

The module also holds :func:`coherence_check`, a sampling probe for whether a
family of normal subgroups G_n of PB_n is compatible with cloning in both
directions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .braids import BraidWord, clone, pairs, pure_generator, winding
from .diagrams import Diagram, DiagramError
from .trees import LEAF, Tree, attach_caret, forest_between, serialize_tree, union_tree


class QuotientError(ValueError):
    pass


@dataclass(frozen=True)
class WindingVector:
    """Integer coefficients on the basis e_{i,j}, 1 <= i < j <= n; zeros are not stored."""

    n: int
    coefficients: tuple[tuple[tuple[int, int], int], ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise QuotientError("a winding vector needs n >= 1")
        clean: dict[tuple[int, int], int] = {}
        for (i, j), c in self.coefficients:
            if not 1 <= i < j <= self.n:
                raise QuotientError(f"pair ({i},{j}) is not a basis index for n={self.n}")
            clean[(i, j)] = clean.get((i, j), 0) + int(c)
        object.__setattr__(
            self, "coefficients", tuple(sorted((ij, c) for ij, c in clean.items() if c))
        )

    @classmethod
    def from_dict(cls, n: int, coeffs: dict[tuple[int, int], int]) -> WindingVector:
        return cls(n, tuple(coeffs.items()))

    @classmethod
    def zero(cls, n: int) -> WindingVector:
        return cls(n)

    @classmethod
    def basis(cls, n: int, i: int, j: int) -> WindingVector:
        return cls(n, (((i, j), 1),))

    @property
    def dimension(self) -> int:
        return self.n * (self.n - 1) // 2

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.coefficients)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.as_dict().get(ij, 0)

    def dense(self) -> tuple[int, ...]:
        d = self.as_dict()
        return tuple(d.get(ij, 0) for ij in pairs(self.n))

    def is_zero(self) -> bool:
        return not self.coefficients

    def __add__(self, other: WindingVector) -> WindingVector:
        if self.n != other.n:
            raise QuotientError(f"cannot add vectors with n={self.n} and n={other.n}")
        return WindingVector(self.n, self.coefficients + other.coefficients)

    def __neg__(self) -> WindingVector:
        return WindingVector(self.n, tuple((ij, -c) for ij, c in self.coefficients))

    def __sub__(self, other: WindingVector) -> WindingVector:
        return self + (-other)

    def __str__(self) -> str:
        return format_vector(self)


def format_vector(v: WindingVector) -> str:
    body = " ".join(f"({i},{j})={v[(i, j)]}" for i, j in pairs(v.n))
    return f"n={v.n}:" + (f" {body}" if body else "")


_VEC_HEAD = re.compile(r"\s*n\s*=\s*(\d+)\s*:(.*)$", re.S)
_VEC_TERM = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*=\s*(-?\d+)")


def parse_vector(text: str) -> WindingVector:
    m = _VEC_HEAD.match(text)
    if not m:
        raise QuotientError("a winding vector is written 'n=3: (1,2)=1 (2,3)=-2'")
    n, rest = int(m.group(1)), m.group(2)
    coeffs: dict[tuple[int, int], int] = {}
    pos = 0
    for t in _VEC_TERM.finditer(rest):
        if rest[pos : t.start()].strip():
            raise QuotientError(f"unexpected text {rest[pos:t.start()].strip()!r}")
        ij = (int(t.group(1)), int(t.group(2)))
        if ij in coeffs:
            raise QuotientError(f"pair {ij} given twice")
        coeffs[ij] = int(t.group(3))
        pos = t.end()
    if rest[pos:].strip():
        raise QuotientError(f"unexpected text {rest[pos:].strip()!r}")
    return WindingVector.from_dict(n, coeffs)


def _clone_pair(i: int, j: int, k: int) -> list[tuple[int, int]]:
    if k < i:
        return [(i + 1, j + 1)]
    if k == i:
        return [(i + 1, j + 1), (i, j + 1)]
    if k < j:
        return [(i, j + 1)]
    if k == j:
        return [(i, j + 1), (i, j)]
    return [(i, j)]


def clone_basis(v: WindingVector, k: int) -> WindingVector:
    """The linear map induced on winding vectors by cloning strand k."""
    if not 1 <= k <= v.n:
        raise QuotientError(f"clone index {k} out of range 1..{v.n}")
    out: list[tuple[tuple[int, int], int]] = []
    for (i, j), c in v.coefficients:
        out.extend((ij, c) for ij in _clone_pair(i, j, k))
    return WindingVector(v.n + 1, tuple(out))


def clone_basis_forest(v: WindingVector, carets: Sequence[int]) -> WindingVector:
    for k in carets:
        v = clone_basis(v, k)
    return v


def delete_index(v: WindingVector, k: int) -> WindingVector:
    """Forget strand k: drop every pair containing k and renumber."""
    if not 1 <= k <= v.n or v.n < 2:
        raise QuotientError(f"cannot delete strand {k} of {v.n}")

    def shift(a: int) -> int:
        return a - 1 if a > k else a

    return WindingVector(
        v.n - 1, tuple(((shift(i), shift(j)), c) for (i, j), c in v.coefficients if k not in (i, j))
    )


def preimage(v: WindingVector) -> BraidWord:
    """A pure braid with winding vector v: a product of powers of the A_{i,j}."""
    out = BraidWord.identity(v.n)
    for (i, j), c in v.coefficients:
        out = out * pure_generator(v.n, i, j) ** c
    return out


# -- the quotient group ----------------------------------------------------------


@dataclass(frozen=True)
class AbelianizedDiagram:
    top: Tree
    vector: WindingVector
    bottom: Tree

    def __post_init__(self):
        n = self.vector.n
        if self.top.leaf_count != n or self.bottom.leaf_count != n:
            raise QuotientError("tree leaf counts must match the vector's strand count")

    @property
    def strands(self) -> int:
        return self.vector.n

    def __mul__(self, other: AbelianizedDiagram) -> AbelianizedDiagram:
        return ab_multiply(self, other)

    def __invert__(self) -> AbelianizedDiagram:
        return ab_invert(self)

    def __str__(self) -> str:
        return f"{serialize_tree(self.top)}|{format_vector(self.vector)}|{serialize_tree(self.bottom)}"


def ab_identity(tree: Tree = LEAF) -> AbelianizedDiagram:
    return AbelianizedDiagram(tree, WindingVector.zero(tree.leaf_count), tree)


def ab_expand(a: AbelianizedDiagram, k: int) -> AbelianizedDiagram:
    return AbelianizedDiagram(
        attach_caret(a.top, k), clone_basis(a.vector, k), attach_caret(a.bottom, k)
    )


def _expand_to(a: AbelianizedDiagram, carets: Iterable[int]) -> AbelianizedDiagram:
    for k in carets:
        a = ab_expand(a, k)
    return a


def ab_multiply(a: AbelianizedDiagram, b: AbelianizedDiagram) -> AbelianizedDiagram:
    u = union_tree(a.bottom, b.top)
    a2 = _expand_to(a, forest_between(a.bottom, u).carets)
    b2 = _expand_to(b, forest_between(b.top, u).carets)
    return AbelianizedDiagram(a2.top, a2.vector + b2.vector, b2.bottom)


def ab_invert(a: AbelianizedDiagram) -> AbelianizedDiagram:
    return AbelianizedDiagram(a.bottom, -a.vector, a.top)


def ab_is_identity(a: AbelianizedDiagram) -> bool:
    return a.top == a.bottom and a.vector.is_zero()


def ab_equal(a: AbelianizedDiagram, b: AbelianizedDiagram) -> bool:
    return ab_is_identity(ab_multiply(a, ab_invert(b)))


def ab_reduce(a: AbelianizedDiagram) -> AbelianizedDiagram:
    """Collapse common carets whose two strands carry cloned windings."""
    from .diagrams import _caret_leaves, _collapse_caret

    changed = True
    while changed:
        changed = False
        for k in sorted(_caret_leaves(a.top) & _caret_leaves(a.bottom)):
            w = delete_index(a.vector, k + 1)
            if clone_basis(w, k) == a.vector:
                a = AbelianizedDiagram(_collapse_caret(a.top, k), w, _collapse_caret(a.bottom, k))
                changed = True
                break
    return a


def quotient_map(d: Diagram) -> AbelianizedDiagram:
    if not d.braid.is_pure:
        raise DiagramError("the quotient map is defined on Fbr (pure braids) only")
    w = winding(d.braid)
    return AbelianizedDiagram(d.top, WindingVector.from_dict(d.strands, w.pair_windings), d.bottom)


# -- coherence -------------------------------------------------------------------

Member = Callable[[int, BraidWord], bool]


@dataclass
class CoherenceReport:
    """Outcome of a sampled two-way check of cloning against a subgroup family.

    ``forward`` lists (p, k) with p in G_n but clone(p, k) not in G_{n+1};
    ``backward`` lists (p, k) with clone(p, k) in G_{n+1} but p not in G_n.
    Passing is evidence on the sampled braids only.
    """

    samples: int = 0
    instances: int = 0
    forward: list[tuple[BraidWord, int]] = field(default_factory=list)
    backward: list[tuple[BraidWord, int]] = field(default_factory=list)

    @property
    def coherent(self) -> bool:
        return not self.forward and not self.backward

    def summary(self) -> str:
        verdict = "no counterexample" if self.coherent else "counterexamples found"
        return (
            f"{verdict}: {len(self.forward)} forward, {len(self.backward)} backward "
            f"over {self.instances} (braid, k) instances from {self.samples} sampled braids"
        )


def coherence_check(member: Member, samples: Iterable[BraidWord], limit: int | None = None) -> CoherenceReport:
    """Test p ∈ G_n ⇔ clone(p, k) ∈ G_{n+1} for every sampled pure p and every k.

    ``limit`` caps the stored counterexamples per direction.
    """
    report = CoherenceReport()
    for p in samples:
        if not p.is_pure:
            raise QuotientError("coherence samples must be pure braids")
        report.samples += 1
        inside = member(p.strands, p)
        for k in range(1, p.strands + 1):
            report.instances += 1
            cloned_inside = member(p.strands + 1, clone(p, k))
            if inside and not cloned_inside:
                if limit is None or len(report.forward) < limit:
                    report.forward.append((p, k))
            elif cloned_inside and not inside:
                if limit is None or len(report.backward) < limit:
                    report.backward.append((p, k))
    return report
