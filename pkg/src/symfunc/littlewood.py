"""Littlewood–Richardson coefficients and skew Schur polynomials.

Coefficients come from expanding exact products of Schur polynomials back into
the Schur basis in as many variables as the target shape has parts, so the same
code path serves lr_coeff, multi_lr_coeff and skew_schur.
"""

from functools import lru_cache
from typing import Dict, Sequence, Tuple

from src.symfunc.partitions import Partition, conjugate, partitions_of, sorted_partitions
from src.symfunc.polynomials import ExactPoly, determinant, poly_ring
from src.symfunc.schur import elementary, schur_bialternant, schur_expand
from src.utils.errors import PartitionError


@lru_cache(maxsize=None)
def _product_expansion(alphas: Tuple[Partition, ...], m: int) -> Tuple[Tuple[Partition, int], ...]:
    R = poly_ring(m)
    product = R.one
    for alpha in alphas:
        product *= schur_bialternant(alpha, m)
        if not product:
            break
    return tuple(schur_expand(product, m).items())


def schur_product(alphas: Sequence[Partition]) -> Dict[Partition, int]:
    """Full Schur expansion of Π π_{α_i}, in graded-lex order of the shapes."""
    alphas = tuple(alphas)
    m = max(sum(alpha.length for alpha in alphas), 1)
    expansion = dict(_product_expansion(alphas, m))
    return {shape: expansion[shape] for shape in sorted_partitions(expansion)}


def lr_coeff(alpha: Partition, beta: Partition, gamma: Partition, m: int = 0) -> int:
    """c^γ_{α,β}: the coefficient of π_γ in π_α·π_β.

    `m` overrides the number of variables used (it must be at least the length
    of γ); the default is the length of γ.
    """
    if gamma.size != alpha.size + beta.size:
        return 0
    if not (gamma.contains(alpha) and gamma.contains(beta)):
        return 0
    m = m or max(gamma.length, 1)
    if m < gamma.length:
        raise PartitionError(f"{m} variables cannot see {gamma}")
    return dict(_product_expansion((alpha, beta), m)).get(gamma, 0)


def multi_lr_coeff(alphas: Sequence[Partition], beta: Partition) -> int:
    """c^β_{α_1,…,α_r}: the coefficient of π_β in Π π_{α_i} (r ≥ 2)."""
    alphas = tuple(alphas)
    if len(alphas) < 2:
        raise PartitionError("multi_lr_coeff needs at least two factors")
    if beta.size != sum(alpha.size for alpha in alphas):
        return 0
    if not all(beta.contains(alpha) for alpha in alphas):
        return 0
    m = max(beta.length, 1)
    return dict(_product_expansion(alphas, m)).get(beta, 0)


@lru_cache(maxsize=None)
def skew_schur(gamma: Partition, alpha: Partition, m: int) -> ExactPoly:
    """π_{γ/α} = Σ_β c^γ_{α,β} π_β in m variables; zero unless α ⊂ γ."""
    R = poly_ring(m)
    if not gamma.contains(alpha):
        return R.zero
    result = R.zero
    for beta in partitions_of(gamma.size - alpha.size):
        if not gamma.contains(beta) or beta.length > m:
            continue
        coeff = lr_coeff(alpha, beta, gamma)
        if coeff:
            result += schur_bialternant(beta, m) * coeff
    return result


def skew_schur_determinant(gamma: Partition, alpha: Partition, m: int) -> ExactPoly:
    """det[ε_{γ̄_i − ᾱ_j − i + j}], the determinant form of π_{γ/α}."""
    R = poly_ring(m)
    if not gamma.contains(alpha):
        return R.zero
    gamma_bar = conjugate(gamma)
    alpha_bar = conjugate(alpha)
    size = gamma_bar.length
    rows = [
        [elementary(gamma_bar.part(i) - alpha_bar.part(j) - i + j, m) for j in range(1, size + 1)]
        for i in range(1, size + 1)
    ]
    return determinant(rows, R)
