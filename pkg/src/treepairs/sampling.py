"""Difficult pair sampling: grow a seed pair while filtering for difficulty.

A sample of size n starts from a uniformly chosen ordered primitive pair
(size 4) and repeats until size n: list every pair (U, V) of growth
neighbors of the current pair that is itself difficult, then pick one
uniformly at random.  The candidate list is never empty because growing
both trees left at their anchors always yields another difficult pair, so
the loop cannot strand.

The inner difficulty filter has to look at ~(3k + 1)^2 candidate pairs per
step, so it packs each neighbor's interval set and created-interval set
into big-int bit masks (a 2-D presence table with key lower * stride +
upper) and tests the three disjointness conditions with two integer ANDs.
The public ``is_difficult`` predicate in ``rotations`` recomputes everything
from the raw words through an entirely separate code path and is the oracle
the masks are tested against.

Sampling is deterministic per (n, seed): drive it with ``random.Random(seed)``
(Mersenne Twister, bit-stable across platforms).  The distribution covers
every difficult pair at sizes small enough to check exhaustively, but it is
not uniform.
"""

from __future__ import annotations

import random

from .census import primitive_pairs
from .errors import NotDifficultError, SizeTooSmallError
from .rotations import TreePair, is_difficult
from .words import TreeWord, word_scan

__all__ = [
    "DEFAULT_SEED",
    "MIN_SIZE",
    "pair_choices",
    "sample_difficult_pair",
    "sample_with_choice_counts",
]

DEFAULT_SEED = 0
MIN_SIZE = 4

# Both orientations of every primitive pair: difficulty is symmetric, and
# seeding with ordered pairs is what lets the sampler reach swapped outputs.
_STARTS = tuple(
    sorted(
        [(str(p.s), str(p.t)) for p in primitive_pairs()]
        + [(str(p.t), str(p.s)) for p in primitive_pairs()]
    )
)


def _interval_masks(word, stride):
    """Pack the non-root intervals and the created intervals of ``word`` into
    two bit masks keyed by lower * stride + upper.

    One pass: when an internal node completes, its own interval bit is set
    and the created-interval bits of its internal children follow from the
    recorded (lower, upper, left-child-upper) triples.  ``stride`` must
    exceed every leaf label so keys stay distinct; callers compare masks
    only between words of equal length and stride.
    """
    nbytes = (stride * stride + 7) >> 3
    has = bytearray(nbytes)
    makes = bytearray(nbytes)
    zeros = 0
    stack = []  # open internal nodes: [lower, kids, first_child, second_child]
    for symbol in word:
        if symbol == "1":
            stack.append([zeros, 0, None, None])
            continue
        done = (zeros, zeros, -1, False)  # (lower, upper, left-child-upper, internal)
        zeros += 1
        while stack:
            top = stack[-1]
            top[1] += 1
            if top[1] == 1:
                top[2] = done
                break
            top[3] = done
            stack.pop()
            lower = top[0]
            upper = zeros - 1
            key = lower * stride + upper
            has[key >> 3] |= 1 << (key & 7)
            left, right = top[2], done
            if left[3]:  # rotating the left child creates (its right's lower, upper)
                key = (left[2] + 1) * stride + upper
                makes[key >> 3] |= 1 << (key & 7)
            if right[3]:  # rotating the right child creates (lower, its left's upper)
                key = lower * stride + right[2]
                makes[key >> 3] |= 1 << (key & 7)
            done = (lower, upper, left[1], True)
    n = len(word) // 2
    if n:  # the root span is shared by every tree; drop it from comparisons
        has[n >> 3] &= 0xFF ^ (1 << (n & 7))
    return int.from_bytes(has, "little"), int.from_bytes(makes, "little")


def _neighbor_entries(word, stride):
    """Distinct growth neighbors of ``word`` with their masks, in lexicographic
    order: (word, interval mask, created mask)."""
    ends = word_scan(word).subtree_end
    seen = set()
    for i in range(len(word)):
        end = ends[i]
        seen.add(word[:i] + "1" + word[i:end] + "0" + word[end:])
        if word[i] == "1":
            seen.add(word[:i] + "10" + word[i:end] + word[end:])
    entries = []
    for grown in sorted(seen):
        has, makes = _interval_masks(grown, stride)
        entries.append((grown, has, makes))
    return entries


def _difficult_grown_pairs(s, t):
    """All difficult (U, V) over growth neighbors of s and t, in lexicographic
    order."""
    stride = len(s) // 2 + 2  # grown trees have labels up to size + 1
    left = _neighbor_entries(s, stride)
    right = _neighbor_entries(t, stride)
    found = []
    for u_word, u_has, u_makes in left:
        u_blocked = u_has | u_makes
        for v_word, v_has, v_makes in right:
            if u_blocked & v_has or v_makes & u_has:
                continue
            found.append((u_word, v_word))
    return found


def pair_choices(pair) -> list:
    """Every difficult pair of growth neighbors of a difficult ``pair``.

    The result is lexicographically ordered and never empty (the anchor
    growth of both sides is always a member); an empty result would mean the
    growth-closure guarantee broke, which is raised as a hard error rather
    than handled.
    """
    if not is_difficult(pair):
        raise NotDifficultError(f"({pair[0]}, {pair[1]}) is not a difficult pair")
    found = _difficult_grown_pairs(str(pair[0]), str(pair[1]))
    if not found:
        raise RuntimeError(
            "difficult pair has no difficult grown pair; growth closure is broken"
        )
    return [TreePair(TreeWord(u), TreeWord(v)) for u, v in found]


def _sample(n, rng):
    if n < MIN_SIZE:
        raise SizeTooSmallError(f"size must be >= {MIN_SIZE}")
    s, t = _STARTS[rng.randrange(len(_STARTS))]
    counts = []
    for _ in range(n - MIN_SIZE):
        found = _difficult_grown_pairs(s, t)
        if not found:
            raise RuntimeError(
                "difficult pair has no difficult grown pair; growth closure is broken"
            )
        counts.append(len(found))
        s, t = found[rng.randrange(len(found))]
    return TreePair(TreeWord._trusted(s), TreeWord._trusted(t)), counts


def sample_difficult_pair(n: int, rng: random.Random) -> TreePair:
    """Draw one difficult pair of size ``n`` (>= 4) using ``rng``.

    Deterministic given the generator state; pass ``random.Random(seed)``
    for reproducible corpora.
    """
    return _sample(n, rng)[0]


def sample_with_choice_counts(n: int, rng: random.Random) -> tuple:
    """Like ``sample_difficult_pair`` but also return the per-step candidate
    counts, which bound the sampler's working storage."""
    return _sample(n, rng)
