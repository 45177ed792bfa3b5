"""Extended ordered binary trees encoded as pre-order 1/0 words.

A tree of size n (n internal nodes, n + 1 leaves) is written as the string
produced by a pre-order walk emitting '1' at every internal node and '0' at
every leaf, so a valid word has length 2n + 1 and the single-leaf tree is
"0".  Leaves are labelled 0..n in left-to-right order, and the interval of a
node is the pair of labels of the lowest and highest leaves below it.  Nodes
are identified by their 0-based index in the word; indices are never
meaningful across two different words.

Everything here is an immutable value and every function is pure, so the
whole module is safe for unrestricted concurrent use.  Queries run off a
single left-to-right scan of the word (``word_scan``) that yields parents,
subtree extents and interval bounds for every node in one linear pass.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import MalformedWordError, NoParentError, NotInternalError

__all__ = [
    "Interval",
    "TreeWord",
    "WordScan",
    "parse_word",
    "word_scan",
    "is_internal",
    "left_child",
    "right_child",
    "parent",
    "subtree_end",
    "interval_of",
    "intervals",
    "one_interval_of",
    "one_intervals",
]


class Interval(NamedTuple):
    """Pair (lowest, highest) of leaf labels spanned by a node."""

    lower: int
    upper: int


class TreeWord(str):
    """A validated pre-order tree word; behaves as a plain string."""

    def __new__(cls, text: str) -> "TreeWord":
        ones = text.count("1")
        zeros = text.count("0")
        if ones + zeros != len(text):
            raise MalformedWordError(f"word may only contain '1' and '0': {text!r}")
        if zeros != ones + 1:
            raise MalformedWordError(
                f"need one more '0' than '1', got {ones} x '1' and {zeros} x '0'"
            )
        depth = 0
        for symbol in text[:-1]:
            depth += 1 if symbol == "1" else -1
            if depth < 0:
                raise MalformedWordError(f"subtree closes before the word ends: {text!r}")
        return super().__new__(cls, text)

    @classmethod
    def _trusted(cls, text: str) -> "TreeWord":
        # For words that are valid by construction; skips the O(n) check.
        return str.__new__(cls, text)

    @property
    def size(self) -> int:
        """Number of internal nodes."""
        return len(self) // 2

    def __repr__(self) -> str:
        return f"TreeWord({str.__repr__(self)})"


def parse_word(text: str) -> TreeWord:
    """Validate ``text`` as a tree word, raising ``MalformedWordError`` if bad."""
    return TreeWord(text)


class WordScan(NamedTuple):
    """Per-node tables for one word, built in a single linear pass.

    ``parent[i]`` is -1 at the root, ``subtree_end[i]`` is the exclusive end
    of node i's subtree slice, and ``lower[i]``/``upper[i]`` are its interval
    bounds (equal for leaves).
    """

    parent: tuple
    subtree_end: tuple
    lower: tuple
    upper: tuple


def word_scan(word: str) -> WordScan:
    """Compute parents, subtree extents and interval bounds for every node."""
    length = len(word)
    parents = [-1] * length
    ends = [0] * length
    lowers = [0] * length
    uppers = [0] * length
    zeros = 0
    stack = []  # open internal nodes
    kids = []  # completed-children counts, parallel to stack
    for i in range(length):
        if stack:
            parents[i] = stack[-1]
        lowers[i] = zeros
        if word[i] == "1":
            stack.append(i)
            kids.append(0)
        else:
            zeros += 1
            uppers[i] = zeros - 1
            ends[i] = i + 1
            while stack:
                kids[-1] += 1
                if kids[-1] < 2:
                    break
                top = stack.pop()
                kids.pop()
                uppers[top] = zeros - 1
                ends[top] = i + 1
    return WordScan(tuple(parents), tuple(ends), tuple(lowers), tuple(uppers))


def subtree_end(word: str, index: int) -> int:
    """Exclusive end of the word slice holding the subtree rooted at ``index``."""
    depth = 0
    for j in range(index, len(word)):
        depth += 1 if word[j] == "1" else -1
        if depth < 0:
            return j + 1
    raise MalformedWordError(f"subtree at index {index} never closes: {word!r}")


def is_internal(word: str, index: int) -> bool:
    """True when the node at ``index`` is internal."""
    return word[index] == "1"


def _require_internal(word: str, index: int) -> None:
    if word[index] != "1":
        raise NotInternalError(f"node @{index} of {word!r} is a leaf")


def left_child(word: str, index: int) -> int:
    """Index of the left child; pre-order places it right after its parent."""
    _require_internal(word, index)
    return index + 1


def right_child(word: str, index: int) -> int:
    """Index of the right child, found by skipping the left subtree."""
    _require_internal(word, index)
    return subtree_end(word, index + 1)


def parent(word: str, index: int) -> int:
    """Index of the parent node; the root (index 0) has none."""
    if index == 0:
        raise NoParentError("the root has no parent")
    return word_scan(word).parent[index]


def interval_of(word: str, index: int) -> Interval:
    """Interval of the node at ``index``; a leaf spans the single label pair."""
    scan = word_scan(word)
    return Interval(scan.lower[index], scan.upper[index])


def intervals(word: str, include_root: bool = True) -> frozenset:
    """Intervals of all internal nodes.

    The root's span covers every leaf and is present in every tree of the
    same size, so pair comparisons exclude it via ``include_root=False``.
    """
    scan = word_scan(word)
    start = 0 if include_root else 1
    return frozenset(
        Interval(scan.lower[i], scan.upper[i])
        for i in range(start, len(word))
        if word[i] == "1"
    )


def one_interval_of(word: str, index: int) -> Interval:
    """Interval created by rotating at the (internal, non-root) node ``index``."""
    _require_internal(word, index)
    if index == 0:
        raise NoParentError("the root cannot be rotated")
    scan = word_scan(word)
    up = scan.parent[index]
    if index == up + 1:  # left child: spans from its right child to its parent
        return Interval(scan.lower[scan.subtree_end[index + 1]], scan.upper[up])
    return Interval(scan.lower[up], scan.upper[index + 1])


def one_intervals(word: str) -> frozenset:
    """Intervals creatable by a single rotation; one per non-root internal node."""
    scan = word_scan(word)
    created = set()
    for i in range(1, len(word)):
        if word[i] != "1":
            continue
        up = scan.parent[i]
        if i == up + 1:
            created.add(Interval(scan.lower[scan.subtree_end[i + 1]], scan.upper[up]))
        else:
            created.add(Interval(scan.lower[up], scan.upper[i + 1]))
    return frozenset(created)
