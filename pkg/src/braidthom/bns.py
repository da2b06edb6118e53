"""Characters of Fbr and finite witness checks for the domination criterion.

A character is a real combination a·φ0 + b·φ1 + c·ω0 + d·ω1. The criterion
checked here: every element of a set J survives under χ, every element of a
set I commutes with some element of J, and the commuting graph of J is
connected. The sets in the actual argument are infinite, so every report from
this module certifies a truncation and nothing more.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import networkx as nx
from networkx.utils import UnionFind

from .braids import pure_generator
from .diagrams import Diagram, braid_diagram, characters, commutes, commutator, delta, multiply, invert
from .gens import a, b, eval_word, f_supported_on, generator, x
from .trees import Tree, all_trees, tree_with_breakpoints, union_tree


class CharacterError(ValueError):
    pass


@dataclass(frozen=True)
class Character:
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def scaled(self, s: Fraction) -> Character:
        return Character(*(s * v for v in self.coefficients))

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def __str__(self) -> str:
        return format_character(self)


PHI0 = Character(1, 0, 0, 0)
PHI1 = Character(0, 1, 0, 0)
OMEGA0 = Character(0, 0, 1, 0)
OMEGA1 = Character(0, 0, 0, 1)
BASIS = (PHI0, PHI1, OMEGA0, OMEGA1)


def format_character(chi: Character) -> str:
    return ",".join(str(v) for v in chi.coefficients)


def parse_character(text: str) -> Character:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise CharacterError("a character is written 'a,b,c,d'")
    try:
        return Character(*(Fraction(p) for p in parts))
    except (ValueError, ZeroDivisionError):
        raise CharacterError(f"bad rational in {text!r}") from None


def evaluate(chi: Character, g: Diagram) -> Fraction:
    vals = characters(g)
    return sum((c * v for c, v in zip(chi.coefficients, vals)), Fraction(0))


def survives(chi: Character, g: Diagram) -> bool:
    return evaluate(chi, g) != 0


def duality_representatives() -> list[Diagram]:
    """x_1 x_0^-1, x_1^-1, beta_{1,3}, alpha_{1,2}."""
    return [
        multiply(generator(x(1)), generator(x(0, -1))),
        generator(x(1, -1)),
        generator(b(1, 3)),
        generator(a(1, 2)),
    ]


def duality_matrix() -> list[list[int]]:
    """Row i: the i-th basis character evaluated on each representative."""
    reps = duality_representatives()
    return [[int(evaluate(chi, e)) for e in reps] for chi in BASIS]


# -- witness checks -----------------------------------------------------------------


@dataclass
class WitnessReport:
    label: str
    character: Character
    j_size: int
    i_size: int
    dead: list[int] = field(default_factory=list)
    undominated: list[int] = field(default_factory=list)
    components: int = 0
    commute_checks: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def survival_ok(self) -> bool:
        return not self.dead

    @property
    def domination_ok(self) -> bool:
        return not self.undominated

    @property
    def connected(self) -> bool:
        return self.components == 1

    @property
    def ok(self) -> bool:
        return self.survival_ok and self.domination_ok and self.connected and all(
            not n.startswith("FAIL") for n in self.notes
        )

    def summary(self) -> str:
        lines = [
            f"{self.label}: chi=({self.character}) |J|={self.j_size} |I|={self.i_size} "
            f"-> {'pass' if self.ok else 'FAIL'} (finite truncation only)",
            f"  survival: {'ok' if self.survival_ok else f'dead J elements {self.dead}'}",
            f"  domination: {'ok' if self.domination_ok else f'undominated I elements {self.undominated}'}",
            f"  commuting graph: {self.components} component(s)",
            f"  commutation tests: {self.commute_checks}",
        ]
        lines.extend(f"  {n}" for n in self.notes)
        return "\n".join(lines)


class _Oracle:
    """Exact commutation with memoization and a call counter."""

    def __init__(self):
        self.calls = 0
        self._cache: dict[tuple[Diagram, Diagram], bool] = {}

    def __call__(self, g: Diagram, h: Diagram) -> bool:
        key = (g, h)
        if key not in self._cache:
            self.calls += 1
            self._cache[key] = self._cache[(h, g)] = commutes(g, h)
        return self._cache[key]


def commuting_graph(J: Sequence[Diagram], oracle=None) -> nx.Graph:
    """The full commuting graph on J (every pair tested)."""
    oracle = oracle or _Oracle()
    graph = nx.Graph()
    graph.add_nodes_from(range(len(J)))
    for u, v in itertools.combinations(range(len(J)), 2):
        if oracle(J[u], J[v]):
            graph.add_edge(u, v)
    return graph


def _components(J: Sequence[Diagram], oracle: _Oracle) -> int:
    # only test pairs that would merge two current components
    uf = UnionFind(range(len(J)))
    for u, v in itertools.combinations(range(len(J)), 2):
        if uf[u] != uf[v] and oracle(J[u], J[v]):
            uf.union(u, v)
    return len(list(uf.to_sets()))


def witness_check(
    J: Sequence[Diagram], I: Sequence[Diagram], chi: Character, label: str = "witness", oracle=None
) -> WitnessReport:
    oracle = oracle or _Oracle()
    rep = WitnessReport(label, chi, len(J), len(I))
    rep.dead = [k for k, g in enumerate(J) if not survives(chi, g)]
    for k, h in enumerate(I):
        if not any(oracle(h, g) for g in J):
            rep.undominated.append(k)
    rep.components = _components(J, oracle) if J else 0
    rep.commute_checks = oracle.calls
    return rep


# -- the three built-in cases ------------------------------------------------------------


def _dyadic_grid(denominator: int) -> list[Fraction]:
    return [Fraction(k, denominator) for k in range(1, denominator)]


def case1_sets(N: int) -> tuple[list[Diagram], list[Diagram]]:
    J = [generator(a(i, i + 1)) for i in range(1, N + 1)]
    I = [generator(a(i, j)) for j in range(2, N + 1) for i in range(1, j)]
    I += [generator(b(i, j)) for j in range(4, N + 1) for i in range(1, j - 2)]
    I += [generator(x(2)), eval_word("x2 x0^-1")]
    return J, I


def case1(N: int = 6) -> WitnessReport:
    J, I = case1_sets(N)
    oracle = _Oracle()
    rep = witness_check(J, I, OMEGA1, f"case 1 (N={N})", oracle)
    a12, a23, a45 = (generator(a(i, i + 1)) for i in (1, 2, 4))
    detail = (not oracle(a23, a12)) and oracle(a23, a45)
    rep.notes.append(
        ("ok" if detail else "FAIL")
        + ": alpha_{2,3} does not commute with alpha_{1,2} but commutes with alpha_{4,5}"
    )
    hub = [k for k, g in enumerate(J) if k > 0 and not oracle(g, J[0])]
    rep.notes.append(f"i with alpha_{{i,i+1}} not commuting with alpha_{{1,2}}: {[k + 1 for k in hub]}")
    rep.commute_checks = oracle.calls
    return rep


def _beta_conjugate(t: Tree) -> Diagram:
    """(T, A_{1,n}, T): an F-conjugate of beta_{1,n}."""
    n = t.leaf_count
    return braid_diagram(t, pure_generator(n, 1, n))


def _edge_tree(k: int) -> Tree:
    """Tree whose first leaf is [0, 2^-k] and last leaf is [1 - 2^-k, 1]."""
    e = Fraction(1, 2**k)
    return tree_with_breakpoints([e, 1 - e])


def case2_base(N: int, max_leaves: int = 4) -> tuple[list[Diagram], list[Diagram]]:
    """The truncated J0 (before augmentation) and I0."""
    # delta of the one-leaf tree is the identity, which dies under every character
    trees = [t for n in range(2, max_leaves + 1) for t in all_trees(n)]
    edge_trees = [_edge_tree(k) for k in range(1, 4)]

    I: list[Diagram] = []
    # Pbr samples: each commutes with delta of its own tree
    pbr = [generator(a(i, j)) for j in range(2, N + 1) for i in range(1, j)]
    pbr += [generator(b(i, j)) for j in range(2, N + 1) for i in range(1, j)]
    I += pbr
    # [F, F]: supports strictly inside (1/8, 7/8)
    grid = _dyadic_grid(8)
    I += [f_supported_on(lo, hi) for lo, hi in itertools.combinations(grid, 2)]
    I += [commutator(generator(x(i)), generator(x(j))) for i in range(1, 3) for j in range(i + 1, 4)]
    # elements of F fixing 1/2
    I += [generator(x(i)) for i in range(1, N + 1)]
    I += [f_supported_on(Fraction(0), Fraction(1, 2)), f_supported_on(Fraction(1, 4), Fraction(1, 2))]

    J = [delta(t) for t in trees] + [delta(g.top) for g in pbr]
    J += [_beta_conjugate(t) for t in trees + edge_trees]
    return list(dict.fromkeys(J)), I


def case2_sets(N: int, max_leaves: int = 4) -> tuple[list[Diagram], list[Diagram]]:
    """J0 closed under the common neighbours delta(T u T') of its pairs."""
    J, I = case2_base(N, max_leaves)
    extra = [delta(union_tree(g.top, h.top)) for g, h in itertools.combinations(J, 2)]
    return list(dict.fromkeys(J + extra)), I


def case2(N: int = 6, max_leaves: int = 4) -> WitnessReport:
    base, _ = case2_base(N, max_leaves)
    J, I = case2_sets(N, max_leaves)
    oracle = _Oracle()
    rep = witness_check(J, I, OMEGA0, f"case 2 (N={N}, trees up to {max_leaves} leaves)", oracle)
    # diameter 2: every base pair shares the neighbour delta(union of their trees)
    bad = []
    for u, v in itertools.combinations(range(len(base)), 2):
        d = delta(union_tree(base[u].top, base[v].top))
        if not (oracle(base[u], d) and oracle(base[v], d)):
            bad.append((u, v))
    pairs = len(base) * (len(base) - 1) // 2
    rep.notes.append(
        ("ok" if not bad else "FAIL")
        + f": all {pairs} pairs of the base set share a delta(T) neighbour (diameter <= 2)"
        + ("" if not bad else f"; failing pairs {bad[:5]}")
    )
    rep.commute_checks = oracle.calls
    return rep


def case3_sets(N: int) -> tuple[list[Diagram], list[Diagram]]:
    grid = _dyadic_grid(8)
    J = [f_supported_on(Fraction(0), p) for p in grid]
    J += [f_supported_on(p, Fraction(1)) for p in grid]
    J += [generator(x(j)) for j in range(1, N + 1)]
    J = list(dict.fromkeys(J))
    I = list(J)
    I += [f_supported_on(lo, hi) for lo, hi in itertools.combinations(_dyadic_grid(4), 2)]
    I += [generator(a(i, j)) for j in range(2, N + 1) for i in range(1, j)]
    I += [generator(b(i, j)) for j in range(2, N + 1) for i in range(1, j)]
    return J, I


def case3(N: int = 6) -> WitnessReport:
    J, I = case3_sets(N)
    return witness_check(J, I, Character(1, 1, 0, 0), f"case 3 (N={N})")


@dataclass
class BuiltinReport:
    bound: int
    cases: list[WitnessReport]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cases)

    def summary(self) -> str:
        head = (
            f"builtin witnesses, bound N={self.bound}: {'pass' if self.ok else 'FAIL'}. "
            "These are finite truncations of infinite sets; passing is evidence, not proof."
        )
        return "\n".join([head] + [c.summary() for c in self.cases])


def builtin_witnesses(N: int = 6) -> BuiltinReport:
    if N < 4:
        raise ValueError("the built-in witness sets need N >= 4")
    return BuiltinReport(N, [case1(N), case2(N), case3(N)])
