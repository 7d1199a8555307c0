"""Local relations placed in context, and seeded random elements for the oracle sweep."""

from itertools import product
from typing import Iterator, List, NamedTuple, Sequence, Tuple

import numpy as np

from src.klr.cartan import CartanSln, pairing, relation_kind
from src.klr.element import ThinElement, identity
from src.klr.permutations import canonical_word
from src.klr.reduction import reduce


class RelationInstance(NamedTuple):
    name: str
    position: int
    lhs: ThinElement
    rhs: ThinElement


def _word(colors: Tuple[int, ...], *factors) -> ThinElement:
    return ThinElement(colors, {tuple(factors): 1})


def _unit(strands: int, m: int) -> Tuple[int, ...]:
    return tuple(1 if p == m else 0 for p in range(1, strands + 1))


def relation_instances(colors: Sequence[int], k: int) -> List[RelationInstance]:
    """Every local relation whose leftmost strand is strand k of `colors`."""
    colors = tuple(colors)
    strands = len(colors)
    found: List[RelationInstance] = []
    if not 1 <= k < strands:
        return found

    left, right = colors[k - 1], colors[k]
    kind = relation_kind(left, right)
    dot_left, dot_right = _unit(strands, k), _unit(strands, k + 1)

    square = _word(colors, k, k)
    if kind == "same":
        found.append(RelationInstance("quadratic_same", k, square, ThinElement(colors, {}, colors)))
    elif kind == "adjacent":
        found.append(RelationInstance("quadratic_adjacent", k, square, _word(colors, dot_left) + _word(colors, dot_right)))
    else:
        found.append(RelationInstance("quadratic_distant", k, square, identity(colors)))

    if kind == "same":
        found.append(RelationInstance(
            "dot_slide_nw", k, _word(colors, dot_left, k) - _word(colors, k, dot_right), identity(colors)
        ))
        found.append(RelationInstance(
            "dot_slide_se", k, _word(colors, k, dot_left) - _word(colors, dot_right, k), identity(colors)
        ))
    else:
        found.append(RelationInstance("dot_slide_left", k, _word(colors, dot_left, k), _word(colors, k, dot_right)))
        found.append(RelationInstance("dot_slide_right", k, _word(colors, dot_right, k), _word(colors, k, dot_left)))
    for m in range(1, strands + 1):
        if m not in (k, k + 1):
            unit = _unit(strands, m)
            found.append(RelationInstance(f"far_dot_{m}", k, _word(colors, unit, k), _word(colors, k, unit)))

    for j in range(k + 2, strands):
        found.append(RelationInstance(f"far_crossing_{j}", k, _word(colors, k, j), _word(colors, j, k)))

    if k + 2 <= strands:
        outer, middle, other = colors[k - 1], colors[k], colors[k + 1]
        lhs = _word(colors, k, k + 1, k)
        rhs = _word(colors, k + 1, k, k + 1)
        if outer == other and pairing(outer, middle) == -1:
            found.append(RelationInstance("braid_correction", k, lhs, rhs + identity(colors)))
        else:
            found.append(RelationInstance("braid", k, lhs, rhs))
    return found


def all_relation_instances(rank: int, max_strands: int) -> Iterator[Tuple[Tuple[int, ...], RelationInstance]]:
    """Every relation in every colouring of 2..max_strands strands over sl(rank)."""
    palette = CartanSln(rank).colors
    for strands in range(2, max_strands + 1):
        for colors in product(palette, repeat=strands):
            for k in range(1, strands):
                for instance in relation_instances(colors, k):
                    yield colors, instance


def random_word(rng: np.random.Generator, colors: Tuple[int, ...], max_generators: int) -> Tuple:
    strands = len(colors)
    size = int(rng.integers(0, max_generators + 1))
    word = []
    for _ in range(size):
        if strands > 1 and rng.random() < 0.6:
            word.append(int(rng.integers(1, strands)))
        else:
            word.append(_unit(strands, int(rng.integers(1, strands + 1))))
    return tuple(word)


def random_element(
    rng: np.random.Generator, rank: int, max_strands: int, max_generators: int, colors: Sequence[int] = None
) -> ThinElement:
    """A single random word with a small random coefficient."""
    if colors is None:
        strands = int(rng.integers(1, max_strands + 1))
        colors = tuple(int(c) for c in rng.integers(1, rank, size=strands))
    colors = CartanSln(rank).check_colors(colors)
    coeff = int(rng.choice([-2, -1, 1, 2]))
    return ThinElement(colors, {random_word(rng, colors, max_generators): coeff})


def matching_perm(source: Tuple[int, ...], target: Tuple[int, ...]) -> Tuple[int, ...]:
    """A permutation taking colour sequence `source` to `target`, matching equal colours in order."""
    used = [False] * len(source)
    perm = []
    for colour in target:
        index = next(i for i, c in enumerate(source) if c == colour and not used[i])
        used[index] = True
        perm.append(index)
    return tuple(perm)


def random_pair(
    rng: np.random.Generator, rank: int, max_strands: int, max_generators: int
) -> Tuple[ThinElement, ThinElement]:
    """Two random elements with a shared boundary; about half are equal by construction."""
    first = random_element(rng, rank, max_strands, max_generators)
    if rng.random() < 0.5:
        return first, reduce(first)
    second = random_element(rng, rank, max_strands, max_generators, colors=first.bottom)
    if second.top != first.top:
        bridge = canonical_word(matching_perm(second.top, first.top))
        word = next(iter(second.terms))
        second = ThinElement(second.bottom, {tuple(bridge) + word: second.terms[word]})
    return first, second
