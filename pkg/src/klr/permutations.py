"""Permutations of strands and their lexicographically least reduced words.

A permutation is stored as a tuple `perm` where `perm[p]` is the bottom position
of the strand that ends at top position p (0-based). A word (j1, ..., jr) is
read top to bottom, so psi_{j1} sits on top and is applied last.
"""

from functools import lru_cache
from typing import Optional, Sequence, Tuple

Perm = Tuple[int, ...]
Word = Tuple[int, ...]


def identity_perm(k: int) -> Perm:
    return tuple(range(k))


def apply_on_top(perm: Perm, j: int) -> Perm:
    """s_j · perm: a crossing at position j placed above the diagram."""
    lst = list(perm)
    lst[j - 1], lst[j] = lst[j], lst[j - 1]
    return tuple(lst)


@lru_cache(maxsize=None)
def perm_of_word(word: Word, k: int) -> Perm:
    perm = identity_perm(k)
    for j in reversed(word):
        perm = apply_on_top(perm, j)
    return perm


def length(perm: Perm) -> int:
    """Number of inversions."""
    return sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])


def min_left_descent(perm: Perm) -> Optional[int]:
    for j in range(1, len(perm)):
        if perm[j - 1] > perm[j]:
            return j
    return None


@lru_cache(maxsize=None)
def canonical_word(perm: Perm) -> Word:
    """The lexicographically least reduced word of perm."""
    first = min_left_descent(perm)
    if first is None:
        return ()
    return (first,) + canonical_word(apply_on_top(perm, first))


def is_reduced(word: Word, k: int) -> bool:
    return len(word) == length(perm_of_word(word, k))


def longest_perm(k: int) -> Perm:
    """w0, reversing all k strands."""
    return tuple(range(k - 1, -1, -1))


def block_transposition(a: int, b: int) -> Perm:
    """Moves a block of a strands across a block of b strands, left block ending on the right."""
    return tuple(range(a, a + b)) + tuple(range(a))


def permute_colors(colors: Sequence[int], perm: Perm) -> Tuple[int, ...]:
    """Top colour sequence of a diagram with bottom `colors`."""
    return tuple(colors[p] for p in perm)


@lru_cache(maxsize=None)
def top_colors(word: Word, colors: Tuple[int, ...]) -> Tuple[int, ...]:
    return permute_colors(colors, perm_of_word(word, len(colors)))


def sign(perm: Perm) -> int:
    return -1 if length(perm) % 2 else 1


def shift_word(word: Word, offset: int) -> Word:
    return tuple(j + offset for j in word)
