"""Seeded random generators for braids, trees and diagrams.

Every suite draws from a ``random.Random`` built by :func:`rng`, so a run is
reproducible from the seed alone. The default seed comes from the
``BRAIDTHOM_SEED`` environment variable (0 when unset).
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass

from .braids import BraidWord, pure_generator
from .diagrams import Diagram, braid_diagram, expand
from .trees import LEAF, Tree, attach_caret

SEED_ENV = "BRAIDTHOM_SEED"


def default_seed() -> int:
    raw = os.environ.get(SEED_ENV, "0")
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def rng(seed: int | None = None) -> random.Random:
    return random.Random(default_seed() if seed is None else seed)


@dataclass(frozen=True)
class SampleConfig:
    """Size limits for random elements."""

    max_strands: int = 5
    max_word: int = 6
    max_pure_factors: int = 3
    max_expansions: int = 5


def random_braid(r: random.Random, n: int, length: int) -> BraidWord:
    if n < 2:
        return BraidWord.identity(n)
    letters = [r.choice((1, -1)) * r.randint(1, n - 1) for _ in range(length)]
    return BraidWord(n, tuple(letters))


def random_pure_braid(r: random.Random, n: int, factors: int) -> BraidWord:
    """A product of random A_{i,j}^{±1}, conjugated by a random short braid."""
    out = BraidWord.identity(n)
    if n < 2:
        return out
    for _ in range(factors):
        i = r.randint(1, n - 1)
        j = r.randint(i + 1, n)
        a = pure_generator(n, i, j)
        out = out * (a if r.random() < 0.5 else a.inverse())
    c = random_braid(r, n, r.randint(0, 2))
    return c * out * c.inverse()


def random_tree(r: random.Random, leaves: int) -> Tree:
    t = LEAF
    for _ in range(leaves - 1):
        t = attach_caret(t, r.randint(1, t.leaf_count))
    return t


def random_vbr(r: random.Random, cfg: SampleConfig = SampleConfig()) -> Diagram:
    n = r.randint(1, cfg.max_strands)
    b = random_braid(r, n, r.randint(0, cfg.max_word))
    return Diagram(random_tree(r, n), b, random_tree(r, n))


def random_fbr(r: random.Random, cfg: SampleConfig = SampleConfig()) -> Diagram:
    n = r.randint(1, cfg.max_strands)
    p = random_pure_braid(r, n, r.randint(0, cfg.max_pure_factors))
    return Diagram(random_tree(r, n), p, random_tree(r, n))


def random_pbr(r: random.Random, cfg: SampleConfig = SampleConfig(), min_strands: int = 1) -> Diagram:
    n = r.randint(min_strands, max(min_strands, cfg.max_strands))
    p = random_pure_braid(r, n, r.randint(1, cfg.max_pure_factors))
    return braid_diagram(random_tree(r, n), p)


def random_expansions(r: random.Random, d: Diagram, count: int) -> Diagram:
    for _ in range(count):
        d = expand(d, r.randint(1, d.strands))
    return d
