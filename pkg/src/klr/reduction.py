"""Reduction of thin elements to the basis {psi_w x^a e(i)}.

Every word is rebuilt from the bottom by left-multiplying one generator at a
time onto basis elements. Left multiplication of a basis element psi_W by a
single generator is memoized on (generator, W, bottom colours) with the dots
of the basis element factored out, since dots sit below every crossing.

Left multiplication by psi_k splits into the cases
  * psi_k psi_W is again reduced and its lex-least word starts with k: exact;
  * reduced, but the lex-least word of s_k w starts with c ≠ k: commute
    (|c − k| ≥ 2) or braid (|c − k| = 1) psi_k past psi_c, correcting for
    the lower terms produced by the rewriting of psi_W;
  * not reduced: peel psi_k off psi_W and apply the quadratic relation.
Each recursive call either shortens W or lands in the exact case.
"""

import logging
from functools import lru_cache
from typing import Dict, Tuple

from src.klr.cartan import pairing, relation_kind
from src.klr.element import Colors, TermWord, ThinElement, basis_word, compose, split_basis
from src.klr.permutations import (
    Word,
    apply_on_top,
    canonical_word,
    min_left_descent,
    perm_of_word,
    top_colors,
)
from src.utils.errors import BoundaryMismatchError

logger = logging.getLogger(__name__)

Dots = Tuple[int, ...]
Basis = Tuple[Word, Dots]
Combination = Dict[Basis, int]
FrozenCombination = Tuple[Tuple[Basis, int], ...]


def _freeze(comb: Combination) -> FrozenCombination:
    return tuple((key, coeff) for key, coeff in comb.items() if coeff)


def _add(acc: Combination, key: Basis, coeff: int) -> None:
    total = acc.get(key, 0) + coeff
    if total:
        acc[key] = total
    else:
        acc.pop(key, None)


def _add_all(acc: Combination, comb, scale: int = 1) -> None:
    items = comb.items() if isinstance(comb, dict) else comb
    for key, coeff in items:
        _add(acc, key, coeff * scale)


def _unit(word: Word, strands: int) -> Combination:
    return {(word, (0,) * strands): 1}


def _shifted(result: FrozenCombination, dots: Dots, coeff: int, acc: Combination) -> None:
    for (word, extra), c in result:
        _add(acc, (word, tuple(p + q for p, q in zip(extra, dots))), c * coeff)


def left_psi(k: int, comb: Combination, colors: Colors) -> Combination:
    """psi_k · comb."""
    acc: Combination = {}
    for (word, dots), coeff in comb.items():
        _shifted(lmul_psi(k, word, colors), dots, coeff, acc)
    return acc


def left_x(m: int, comb: Combination, colors: Colors) -> Combination:
    """x_m · comb."""
    acc: Combination = {}
    for (word, dots), coeff in comb.items():
        _shifted(lmul_x(m, word, colors), dots, coeff, acc)
    return acc


def _without_leading(comb: Combination, leading: Basis) -> Combination:
    lower = dict(comb)
    _add(lower, leading, -1)
    return lower


@lru_cache(maxsize=None)
def lmul_x(m: int, word: Word, colors: Colors) -> FrozenCombination:
    """x_m psi_W in the basis, for W a lex-least reduced word."""
    strands = len(colors)
    if not word:
        return ((((), tuple(1 if p == m else 0 for p in range(1, strands + 1))), 1),)

    j, rest = word[0], word[1:]
    below = j + 1 if m == j else j if m == j + 1 else m
    acc = left_psi(j, dict(lmul_x(below, rest, colors)), colors)

    entering = top_colors(rest, colors)
    if entering[j - 1] == entering[j]:
        if m == j:
            _add(acc, (rest, (0,) * strands), 1)
        elif m == j + 1:
            _add(acc, (rest, (0,) * strands), -1)
    return _freeze(acc)


@lru_cache(maxsize=None)
def lmul_psi(k: int, word: Word, colors: Colors) -> FrozenCombination:
    """psi_k psi_W in the basis, for W a lex-least reduced word."""
    strands = len(colors)
    zero_dots = (0,) * strands
    perm = perm_of_word(word, strands)

    if perm[k - 1] > perm[k]:
        shorter = canonical_word(apply_on_top(perm, k))
        lower = _without_leading(dict(lmul_psi(k, shorter, colors)), (word, zero_dots))
        entering = top_colors(shorter, colors)
        kind = relation_kind(entering[k - 1], entering[k])
        acc: Combination = {}
        if kind == "distant":
            _add(acc, (shorter, zero_dots), 1)
        elif kind == "adjacent":
            _add_all(acc, lmul_x(k, shorter, colors))
            _add_all(acc, lmul_x(k + 1, shorter, colors))
        _add_all(acc, left_psi(k, lower, colors), -1)
        return _freeze(acc)

    target = apply_on_top(perm, k)
    first = min_left_descent(target)
    if first == k:
        return ((((k,) + word, zero_dots), 1),)

    if abs(first - k) >= 2:
        base = canonical_word(apply_on_top(perm, first))
        lower = _without_leading(dict(lmul_psi(first, base, colors)), (word, zero_dots))
        acc = left_psi(first, left_psi(k, _unit(base, strands), colors), colors)
        _add_all(acc, left_psi(k, lower, colors), -1)
        return _freeze(acc)

    base = canonical_word(apply_on_top(apply_on_top(perm, first), k))
    rebuilt = left_psi(first, left_psi(k, _unit(base, strands), colors), colors)
    lower = _without_leading(rebuilt, (word, zero_dots))
    acc = left_psi(first, left_psi(k, left_psi(first, _unit(base, strands), colors), colors), colors)

    low = min(first, k)
    entering = top_colors(base, colors)
    outer, middle, other = entering[low - 1], entering[low], entering[low + 1]
    if outer == other and pairing(outer, middle) == -1:
        _add(acc, (base, zero_dots), 1 if k < first else -1)
    _add_all(acc, left_psi(k, lower, colors), -1)
    return _freeze(acc)


@lru_cache(maxsize=None)
def reduce_word(word: TermWord, colors: Colors) -> FrozenCombination:
    """Basis expansion of a single word over the bottom colours."""
    strands = len(colors)
    basis = split_basis(word, strands)
    if basis is not None:
        return ((basis, 1),)
    head, tail = word[0], word[1:]
    below = dict(reduce_word(tail, colors)) if tail else _unit((), strands)
    if isinstance(head, int):
        return _freeze(left_psi(head, below, colors))
    comb = below
    for m, exponent in enumerate(head, start=1):
        for _ in range(exponent):
            comb = left_x(m, comb, colors)
    return _freeze(comb)


def reduce(element: ThinElement) -> ThinElement:
    """The canonical basis expansion of element; reduced elements are returned as is."""
    if element.reduced:
        return element
    acc: Combination = {}
    for word, coeff in element.terms.items():
        _add_all(acc, reduce_word(word, element.bottom), coeff)
    terms = {basis_word(crossings, dots): coeff for (crossings, dots), coeff in acc.items()}
    return ThinElement(element.bottom, terms, element.top, reduced=True)


def equal(first: ThinElement, second: ThinElement) -> bool:
    """True iff both elements have the same canonical form."""
    if first.bottom != second.bottom or (first.terms and second.terms and first.top != second.top):
        raise BoundaryMismatchError(
            f"cannot compare {first.bottom}->{first.top} with {second.bottom}->{second.top}"
        )
    return dict(reduce(first).terms) == dict(reduce(second).terms)


def stack(*elements: ThinElement) -> ThinElement:
    """Reduced composite of elements listed top first, reducing after each step."""
    result = reduce(elements[-1])
    for element in reversed(elements[:-1]):
        result = reduce(compose(element, result))
    return result
