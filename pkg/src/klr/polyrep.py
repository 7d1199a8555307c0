"""The polynomial representation, used as an oracle independent of reduce().

Dots multiply, same-colour crossings are divided differences, distant colours
swap variables, and adjacent colours swap and multiply by (x_k + x_{k+1}) in
one of the two colour orders (the orientation).
"""

from itertools import product
from typing import Iterator, Optional, Tuple

from src.klr.cartan import relation_kind
from src.klr.element import Colors, TermWord, ThinElement
from src.symfunc.polynomials import ExactPoly, divided_difference, monomial, poly_ring, swap
from src.utils.errors import BoundaryMismatchError

ORIENTATIONS = ("ascending", "descending")


def _adjacent_factor_applies(left: int, right: int, orientation: str) -> bool:
    if orientation == "ascending":
        return left < right
    return left > right


def act_word(word: TermWord, f: ExactPoly, bottom: Colors, orientation: str = "ascending") -> ExactPoly:
    """Apply one word, bottom factor first."""
    colors = list(bottom)
    x = f.ring.gens
    for factor in reversed(word):
        if isinstance(factor, int):
            k = factor
            kind = relation_kind(colors[k - 1], colors[k])
            if kind == "same":
                f = divided_difference(f, k)
            else:
                f = swap(f, k)
                if kind == "adjacent" and _adjacent_factor_applies(colors[k - 1], colors[k], orientation):
                    f = f * (x[k - 1] + x[k])
            colors[k - 1], colors[k] = colors[k], colors[k - 1]
        else:
            f = f * monomial(len(factor), factor)
    return f


def poly_action(
    element: ThinElement, f: ExactPoly, orientation: str = "ascending"
) -> Tuple[Colors, ExactPoly]:
    """(top colours, element · f) for f a polynomial in one variable per strand."""
    if orientation not in ORIENTATIONS:
        raise ValueError(f"orientation must be one of {ORIENTATIONS}, got {orientation!r}")
    R = poly_ring(max(element.strands, 1))
    f = R(f) if f.ring is R else f.set_ring(R)
    total = R.zero
    for word, coeff in element.terms.items():
        total += act_word(word, f, element.bottom, orientation) * coeff
    return element.top, total


def probe_monomials(bottom: Colors, bound: Optional[int] = None) -> Iterator[ExactPoly]:
    """x^a with a_i below the multiplicity of strand i's colour, or below `bound` for every i.

    The default family is smaller than the full a_i < k family (`bound=k` on k
    strands) but detects the same differences: it spans the polynomial ring over
    polynomials symmetric in each colour block, and the action is linear over those.
    """
    strands = max(len(bottom), 1)
    if bound is not None:
        ranges = [range(bound)] * strands
    elif bottom:
        ranges = [range(bottom.count(c)) for c in bottom]
    else:
        ranges = [range(1)]
    for exps in product(*ranges):
        yield monomial(strands, exps)


def oracle_equal(
    first: ThinElement,
    second: ThinElement,
    orientation: str = "ascending",
    bound: Optional[int] = None,
) -> bool:
    """Compare the two actions on every probe monomial."""
    if first.bottom != second.bottom or (first.terms and second.terms and first.top != second.top):
        raise BoundaryMismatchError(
            f"cannot compare {first.bottom}->{first.top} with {second.bottom}->{second.top}"
        )
    for f in probe_monomials(first.bottom, bound):
        if poly_action(first, f, orientation)[1] != poly_action(second, f, orientation)[1]:
            return False
    return True
