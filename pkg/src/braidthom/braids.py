"""Braid words in Artin generators and everything done to them.

Conventions (fixed once, used everywhere):

* A word lists its letters in product order; the product ``b * c`` stacks
  ``b`` above ``c``, so letters are read from the top of the picture down.
* Letter ``+i`` is sigma_i: the strand in position i crosses over the strand
  in position i + 1. Winding numbers count each crossing by its letter sign.
* Strands are numbered by their positions at the bottom of the picture. The
  permutation of a braid sends a bottom position to the top position of the
  same strand.

Triviality is decided by the faithful Artin action on the free group of rank
n, with the word split in half so that only half of it is ever applied.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class BraidError(ValueError):
    pass


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise BraidError("a braid has at least one strand")
        letters = tuple(int(a) for a in self.letters)
        for a in letters:
            if a == 0 or abs(a) >= self.strands:
                raise BraidError(f"letter {a} is not a generator of B_{self.strands}")
        object.__setattr__(self, "letters", free_reduce(letters))

    @classmethod
    def identity(cls, n: int) -> BraidWord:
        return cls(n, ())

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.strands != other.strands:
            raise BraidError(f"cannot multiply B_{self.strands} by B_{other.strands}")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-a for a in reversed(self.letters)))

    def __invert__(self) -> BraidWord:
        return self.inverse()

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.strands, self.letters * k)

    def __str__(self) -> str:
        return format_braid(self)

    @cached_property
    def permutation(self) -> tuple[int, ...]:
        return permutation_of(self)

    @cached_property
    def is_pure(self) -> bool:
        return self.permutation == tuple(range(1, self.strands + 1))


def format_braid(b: BraidWord) -> str:
    return f"B{b.strands}:" + ",".join(str(a) for a in b.letters)


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse ``"1,2,-1"`` (with ``strands`` given) or ``"B3:1,2,-1"``."""
    s = text.strip()
    if s[:1] in ("B", "b") and ":" in s:
        head, _, s = s.partition(":")
        try:
            n = int(head[1:])
        except ValueError:
            raise BraidError(f"bad strand prefix {head!r}") from None
        if strands is not None and strands != n:
            raise BraidError(f"strand prefix B{n} disagrees with {strands}")
        strands = n
    if strands is None:
        raise BraidError("strand count missing: use the 'Bn:' prefix")
    s = s.strip()
    letters = []
    if s:
        for tok in s.split(","):
            tok = tok.strip()
            try:
                letters.append(int(tok))
            except ValueError:
                raise BraidError(f"bad braid letter {tok!r}") from None
    return BraidWord(strands, tuple(letters))


def sigma(n: int, i: int, e: int = 1) -> BraidWord:
    return BraidWord(n, (i if e > 0 else -i,))


# -- permutations --------------------------------------------------------------


def _top_to_bottom_positions(b: BraidWord) -> list[int]:
    """Walk the word downward; entry t - 1 is the bottom position of the strand at top t."""
    at = list(range(1, b.strands + 1))  # at[pos - 1] = top label of the strand there
    for a in b.letters:
        i = abs(a)
        at[i - 1], at[i] = at[i], at[i - 1]
    bottom_of = [0] * b.strands
    for pos, label in enumerate(at, start=1):
        bottom_of[label - 1] = pos
    return bottom_of


def permutation_of(b: BraidWord) -> tuple[int, ...]:
    """Images of bottom positions 1..n: the top position of the same strand."""
    bottom_of = _top_to_bottom_positions(b)
    top_of = [0] * b.strands
    for top, bottom in enumerate(bottom_of, start=1):
        top_of[bottom - 1] = top
    return tuple(top_of)


def is_pure(b: BraidWord) -> bool:
    return b.is_pure


# -- triviality ----------------------------------------------------------------


def _act(word: list[int], a: int) -> list[int]:
    """Substitute the image of every letter under the Artin automorphism of letter ``a``."""
    i = abs(a)
    out: list[int] = []

    def push(x: int) -> None:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)

    if a > 0:
        # g_i -> g_i g_{i+1} g_i^-1, g_{i+1} -> g_i
        for x in word:
            g = abs(x)
            if g == i:
                if x > 0:
                    push(i), push(i + 1), push(-i)
                else:
                    push(i), push(-(i + 1)), push(-i)
            elif g == i + 1:
                push(i if x > 0 else -i)
            else:
                push(x)
    else:
        # g_i -> g_{i+1}, g_{i+1} -> g_{i+1}^-1 g_i g_{i+1}
        for x in word:
            g = abs(x)
            if g == i:
                push(i + 1 if x > 0 else -(i + 1))
            elif g == i + 1:
                if x > 0:
                    push(-(i + 1)), push(i), push(i + 1)
                else:
                    push(-(i + 1)), push(-i), push(i + 1)
            else:
                push(x)
    return out


def artin_images(b: BraidWord) -> list[tuple[int, ...]]:
    """Images of the free generators g_1..g_n under the automorphism of ``b``."""
    images = []
    for g in range(1, b.strands + 1):
        w = [g]
        for a in reversed(b.letters):
            w = _act(w, a)
        images.append(tuple(w))
    return images


def is_trivial(b: BraidWord) -> bool:
    if not b.letters:
        return True
    if not b.is_pure:
        return False
    if any(winding_numbers(b).values()):
        return False
    half = len(b.letters) // 2
    top = BraidWord(b.strands, b.letters[:half])
    bottom = BraidWord(b.strands, b.letters[half:])
    return artin_images(top) == artin_images(bottom.inverse())


def braid_equal(b1: BraidWord, b2: BraidWord) -> bool:
    if b1.strands != b2.strands:
        raise BraidError(f"cannot compare B_{b1.strands} with B_{b2.strands}")
    return is_trivial(b1 * b2.inverse())


# -- cloning and deleting strands ---------------------------------------------


def clone(b: BraidWord, k: int) -> BraidWord:
    """kappa_k: split the strand at bottom position k into two parallel strands."""
    n = b.strands
    if not 1 <= k <= n:
        raise BraidError(f"clone index {k} out of range 1..{n}")
    p = b.permutation[k - 1]  # the pair's position, walking down from the top
    out: list[int] = []
    for a in b.letters:
        i, e = abs(a), (1 if a > 0 else -1)
        if i + 1 < p:
            out.append(a)
        elif i > p:
            out.append(e * (i + 1))
        elif i == p:
            # pair moves right past the strand at i + 1: inner crossing first
            out.extend((e * (i + 1), e * i))
            p = i + 1
        else:
            out.extend((e * i, e * (i + 1)))
            p = i
    return BraidWord(n + 1, tuple(out))


def clone_forest(b: BraidWord, carets: Sequence[int]) -> BraidWord:
    for k in carets:
        b = clone(b, k)
    return b


def delete_strands(b: BraidWord, keep: Iterable[int]) -> BraidWord:
    """Forget every strand whose bottom position is not in ``keep``."""
    n = b.strands
    keep_set = set(keep)
    if not keep_set:
        raise BraidError("must keep at least one strand")
    if not keep_set <= set(range(1, n + 1)):
        raise BraidError(f"strand indices must lie in 1..{n}")
    top_of = b.permutation
    kept = [False] * (n + 2)
    for k in keep_set:
        kept[top_of[k - 1]] = True
    out: list[int] = []
    for a in b.letters:
        i = abs(a)
        if kept[i] and kept[i + 1]:
            rank = sum(kept[1:i]) + 1
            out.append(rank if a > 0 else -rank)
        kept[i], kept[i + 1] = kept[i + 1], kept[i]
    return BraidWord(len(keep_set), tuple(out))


def forget_after(b: BraidWord, m: int) -> BraidWord:
    """phi_{n,m}: keep only the first m strands."""
    return delete_strands(b, range(1, m + 1))


# -- winding -------------------------------------------------------------------


@dataclass(frozen=True)
class WindingData:
    strands: int
    pair_windings: dict[tuple[int, int], int]

    @property
    def omega0(self) -> int:
        if self.strands < 2:
            return 0
        return self.pair_windings[(1, self.strands)]

    @property
    def omega1(self) -> int:
        return sum(self.pair_windings[(i, i + 1)] for i in range(1, self.strands))

    def vector(self) -> tuple[int, ...]:
        """Coefficients on e_{i,j} in lexicographic order of (i, j)."""
        return tuple(self.pair_windings[ij] for ij in pairs(self.strands))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.pair_windings[ij]


def pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(1, n + 1), 2))


def winding_numbers(p: BraidWord) -> dict[tuple[int, int], int]:
    """Signed crossing counts between strand pairs, halved; strands labelled at the bottom."""
    bottom_of = _top_to_bottom_positions(p)
    at = list(bottom_of)  # label = bottom position of the strand (pure: also the top)
    twice = {ij: 0 for ij in pairs(p.strands)}
    for a in p.letters:
        i = abs(a)
        u, v = at[i - 1], at[i]
        twice[(min(u, v), max(u, v))] += 1 if a > 0 else -1
        at[i - 1], at[i] = v, u
    out = {}
    for ij, c in twice.items():
        if c % 2:
            raise BraidError(f"odd crossing count for strands {ij}: braid is not pure")
        out[ij] = c // 2
    return out


def winding(p: BraidWord) -> WindingData:
    if not p.is_pure:
        raise BraidError("winding numbers are defined for pure braids only")
    return WindingData(p.strands, winding_numbers(p))


# -- named braids and looseness -------------------------------------------------


def full_twist(n: int) -> BraidWord:
    """Delta_n = (sigma_1 ... sigma_{n-1})^n."""
    return BraidWord(n, tuple(range(1, n)) * n)


def pure_generator(n: int, i: int, j: int) -> BraidWord:
    """A_{i,j} = sigma_i ... sigma_{j-2} sigma_{j-1}^2 sigma_{j-2}^-1 ... sigma_i^-1."""
    if not 1 <= i < j <= n:
        raise BraidError(f"need 1 <= i < j <= {n}, got ({i}, {j})")
    up = tuple(range(i, j - 1))
    return BraidWord(n, up + (j - 1, j - 1) + tuple(-a for a in reversed(up)))


def is_m_loose(p: BraidWord, m: int) -> bool:
    n = p.strands
    if not 1 <= m <= n:
        raise BraidError(f"looseness index {m} out of range 1..{n}")
    if not p.is_pure:
        raise BraidError("looseness is defined for pure braids only")
    return all(is_trivial(delete_strands(p, s)) for s in itertools.combinations(range(1, n + 1), m))


def is_brunnian(p: BraidWord) -> bool:
    return p.strands < 2 or is_m_loose(p, p.strands - 1)


def is_central(b: BraidWord) -> bool:
    """Whether b commutes with every Artin generator of B_n."""
    n = b.strands
    return all(braid_equal(b * sigma(n, i), sigma(n, i) * b) for i in range(1, n))
