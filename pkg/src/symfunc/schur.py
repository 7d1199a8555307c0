"""Schur, elementary and complete symmetric polynomials and Schur-basis expansion."""

from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Dict, Sequence, Tuple

from src.symfunc.partitions import EMPTY, Partition
from src.symfunc.polynomials import ExactPoly, determinant, poly_ring, vandermonde
from src.utils.errors import PartitionError


@lru_cache(maxsize=None)
def schur_bialternant(alpha: Partition, m: int) -> ExactPoly:
    """π_α(x1..xm) = |x_i^{α_j+m−j}| / Δ, zero when α has more than m parts."""
    R = poly_ring(m)
    if alpha.length > m:
        return R.zero
    x = R.gens
    shifted = [alpha.part(j) + m - j for j in range(1, m + 1)]
    alternant = determinant([[x[i] ** e for e in shifted] for i in range(m)], R)
    return alternant.exquo(vandermonde(m))


@lru_cache(maxsize=None)
def elementary(degree: int, m: int) -> ExactPoly:
    """ε_degree(x1..xm); zero for degree < 0 or degree > m."""
    R = poly_ring(m)
    if degree < 0 or degree > m:
        return R.zero
    x = R.gens
    result = R.zero
    for subset in combinations(range(m), degree):
        term = R.one
        for i in subset:
            term *= x[i]
        result += term
    return result


@lru_cache(maxsize=None)
def complete(degree: int, m: int) -> ExactPoly:
    """h_degree(x1..xm); zero for degree < 0."""
    R = poly_ring(m)
    if degree < 0:
        return R.zero
    x = R.gens
    result = R.zero
    for multiset in combinations_with_replacement(range(m), degree):
        term = R.one
        for i in multiset:
            term *= x[i]
        result += term
    return result


@lru_cache(maxsize=None)
def schur_giambelli(alpha: Partition, m: int) -> ExactPoly:
    """det[ε_{α_i+j−i}], which is π of the conjugate of α."""
    R = poly_ring(m)
    size = alpha.length
    rows = [[elementary(alpha.part(i) + j - i, m) for j in range(1, size + 1)] for i in range(1, size + 1)]
    return determinant(rows, R)


def jacobi_trudi(alpha: Partition, m: int) -> ExactPoly:
    """det[h_{α_i+j−i}] = π_α."""
    R = poly_ring(m)
    size = alpha.length
    rows = [[complete(alpha.part(i) + j - i, m) for j in range(1, size + 1)] for i in range(1, size + 1)]
    return determinant(rows, R)


def schur_expand(f: ExactPoly, m: int) -> Dict[Partition, int]:
    """Coefficients of a symmetric polynomial in the Schur basis of m variables.

    Peels off the lex-leading monomial, which for a symmetric polynomial is
    always a partition, until nothing is left.
    """
    R = poly_ring(m)
    remainder = R(f) if f.ring is R else f.set_ring(R)
    expansion: Dict[Partition, int] = {}
    while remainder:
        exps, coeff = remainder.LT
        if any(exps[i] < exps[i + 1] for i in range(len(exps) - 1)):
            raise PartitionError(f"polynomial is not symmetric (leading exponent {tuple(exps)})")
        shape = Partition(tuple(exps))
        expansion[shape] = int(coeff)
        remainder = remainder - schur_bialternant(shape, m) * coeff
    return expansion


def straighten(sequence: Sequence[int]) -> Tuple[int, Partition]:
    """Rewrite π of an arbitrary integer sequence as ±π_γ via the bialternant.

    Adds the staircase, sorts decreasingly and subtracts it again; returns
    (0, EMPTY) when two shifted entries collide or one is negative.
    """
    k = len(sequence)
    shifted = [value + k - 1 - i for i, value in enumerate(sequence)]
    if len(set(shifted)) < k or any(value < 0 for value in shifted):
        return 0, EMPTY
    sign = 1
    for i in range(k):
        for j in range(i + 1, k):
            if shifted[i] < shifted[j]:
                sign = -sign
    ordered = sorted(shifted, reverse=True)
    return sign, Partition(tuple(value - (k - 1 - i) for i, value in enumerate(ordered)))
