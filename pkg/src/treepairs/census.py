"""Exhaustive oracles: all trees of a size, all difficult pairs, primitives.

These enumerations exist to cross-check the fast paths at desk scale, so
both carry deliberate size guards (override ``max_size`` to push further;
the pair census costs Catalan(n)^2 difficulty checks).
"""

from __future__ import annotations

import math

from .errors import SizeGuardExceededError
from .rotations import TreePair
from .words import TreeWord, intervals, one_intervals

__all__ = [
    "catalan",
    "enumerate_trees",
    "enumerate_difficult_pairs",
    "primitive_pairs",
    "TREE_GUARD",
    "PAIR_GUARD",
]

TREE_GUARD = 14
PAIR_GUARD = 8

# The four unordered difficult pairs of size 4 (one canonical s < t
# representative each), reproduced by enumerate_difficult_pairs(4) and
# pinned by the census tests.  No smaller difficult pairs exist.
_PRIMITIVE_PAIRS = (
    ("101011000", "111010000"),
    ("101100100", "111001000"),
    ("101101000", "111000100"),
    ("110010100", "110110000"),
)


def catalan(n: int) -> int:
    """Number of extended ordered binary trees with ``n`` internal nodes."""
    return math.comb(2 * n, n) // (n + 1)


def enumerate_trees(n: int, max_size: int = TREE_GUARD) -> list:
    """All valid words of size ``n`` in lexicographic order.

    Generated by a backtracking walk that tries '0' before '1', so the
    output needs no sort; the count is always Catalan(n).
    """
    if n < 0:
        raise ValueError("tree size cannot be negative")
    if n > max_size:
        raise SizeGuardExceededError(f"size {n} exceeds the census guard {max_size}")
    words = []
    symbols = []

    def walk(ones, zeros):
        if zeros == n + 1:
            words.append(TreeWord._trusted("".join(symbols)))
            return
        if zeros < ones or (ones == n and zeros == n):
            symbols.append("0")
            walk(ones, zeros + 1)
            symbols.pop()
        if ones < n:
            symbols.append("1")
            walk(ones + 1, zeros)
            symbols.pop()

    walk(0, 0)
    return words


def enumerate_difficult_pairs(n: int, max_size: int = PAIR_GUARD) -> list:
    """All ordered difficult pairs of size ``n`` in lexicographic order."""
    if n > max_size:
        raise SizeGuardExceededError(f"size {n} exceeds the census guard {max_size}")
    rows = [
        (w, intervals(w, include_root=False), one_intervals(w))
        for w in enumerate_trees(n, max_size=max(n, TREE_GUARD))
    ]
    found = []
    for s, s_has, s_makes in rows:
        for t, t_has, t_makes in rows:
            if s is t:
                continue
            if (
                s_has.isdisjoint(t_has)
                and s_makes.isdisjoint(t_has)
                and t_makes.isdisjoint(s_has)
            ):
                found.append(TreePair(s, t))
    return found


def primitive_pairs() -> list:
    """The fixed table of size-4 difficult pairs, one per unordered pair.

    These are the smallest difficult pairs and the seeds every grown sample
    starts from.  Representatives are ordered s < t lexicographically.
    """
    return [TreePair(TreeWord(s), TreeWord(t)) for s, t in _PRIMITIVE_PAIRS]
