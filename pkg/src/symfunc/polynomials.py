"""Exact integer polynomial rings x1..xm and the operators acting on them.

Everything here is a thin layer over sympy's sparse `PolyRing` over ZZ, kept in
lex order so that leading terms drive the Schur-basis triangular solve.
"""

from functools import lru_cache
from typing import List, Sequence, Tuple

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement, PolyRing

ExactPoly = PolyElement


@lru_cache(maxsize=None)
def poly_ring(m: int) -> PolyRing:
    """The ring ZZ[x1, ..., xm] (m ≥ 1)."""
    if m < 1:
        raise ValueError(f"a polynomial ring needs at least one variable, got {m}")
    return PolyRing(",".join(f"x{i}" for i in range(1, m + 1)), ZZ, lex)


def monomial(m: int, exponents: Sequence[int]) -> PolyElement:
    """x^a in m variables."""
    R = poly_ring(m)
    if len(exponents) != m:
        raise ValueError(f"exponent vector {tuple(exponents)} does not have {m} entries")
    return R.from_dict({tuple(int(e) for e in exponents): 1})


def swap(f: PolyElement, k: int) -> PolyElement:
    """s_k f: exchange x_k and x_{k+1} (1-based)."""
    R = f.ring

    def flip(exps: Tuple[int, ...]) -> Tuple[int, ...]:
        lst = list(exps)
        lst[k - 1], lst[k] = lst[k], lst[k - 1]
        return tuple(lst)

    return R.from_dict({flip(m): c for m, c in f.items()})


def divided_difference(f: PolyElement, k: int) -> PolyElement:
    """∂_k f = (f − s_k f) / (x_k − x_{k+1}); the division is always exact."""
    R = f.ring
    x = R.gens
    return (f - swap(f, k)).exquo(x[k - 1] - x[k])


def is_symmetric(f: PolyElement) -> bool:
    return all(swap(f, k) == f for k in range(1, f.ring.ngens))


def embed(f: PolyElement, m: int, offset: int = 0) -> PolyElement:
    """Move f into m variables, renaming x_i to x_{i+offset}."""
    R = poly_ring(m)
    width = f.ring.ngens
    if offset + width > m:
        raise ValueError(f"cannot place {width} variables at offset {offset} inside {m}")
    pad_left = (0,) * offset
    pad_right = (0,) * (m - offset - width)
    return R.from_dict({pad_left + tuple(exps) + pad_right: c for exps, c in f.items()})


def vandermonde(m: int) -> PolyElement:
    """Δ = Π_{r<s} (x_r − x_s)."""
    R = poly_ring(m)
    x = R.gens
    result = R.one
    for r in range(m):
        for s in range(r + 1, m):
            result *= x[r] - x[s]
    return result


def determinant(rows: List[List[PolyElement]], R: PolyRing) -> PolyElement:
    """Exact determinant of a square matrix over ZZ[x]; the empty matrix has determinant 1."""
    n = len(rows)
    if n == 0:
        return R.one
    matrix = DomainMatrix([[R(entry) for entry in row] for row in rows], (n, n), R.to_domain())
    return R(matrix.det())
