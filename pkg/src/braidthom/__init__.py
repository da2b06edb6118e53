"""Exact computation in the braided Thompson groups Vbr and Fbr."""

from .braids import BraidWord
from .diagrams import Diagram, classify, characters, equal, multiply, reduce, x_ess
from .gens import eval_word, generator
from .trees import Tree, parse_tree, serialize_tree

__all__ = [
    "BraidWord",
    "Diagram",
    "Tree",
    "characters",
    "classify",
    "equal",
    "eval_word",
    "generator",
    "multiply",
    "parse_tree",
    "reduce",
    "serialize_tree",
    "x_ess",
]
