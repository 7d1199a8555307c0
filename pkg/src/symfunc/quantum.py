"""Quantum integers, factorials and binomials as exact Laurent polynomials in q."""

from functools import lru_cache
from typing import Dict, Iterator, Mapping, Tuple

from sympy import ZZ
from sympy.polys.rings import PolyElement, PolyRing

from src.symfunc.partitions import enumerate_partitions
from src.utils.errors import PartitionError

Q_RING = PolyRing("q", ZZ)


class QLaurent:
    """q^valuation · p(q) with p ∈ ZZ[q]; normalized so that p(0) ≠ 0 unless zero."""

    __slots__ = ("valuation", "poly")

    def __init__(self, poly: PolyElement = None, valuation: int = 0):
        poly = Q_RING.zero if poly is None else Q_RING(poly)
        if not poly:
            valuation = 0
        else:
            low = min(exps[0] for exps in poly.monoms())
            if low:
                poly = poly.exquo(Q_RING.gens[0] ** low)
                valuation += low
        self.poly = poly
        self.valuation = valuation

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> "QLaurent":
        """Build from {exponent: coefficient}; exponents may be negative."""
        nonzero = {e: c for e, c in terms.items() if c}
        if not nonzero:
            return cls()
        low = min(nonzero)
        return cls(Q_RING.from_dict({(e - low,): c for e, c in nonzero.items()}), low)

    @classmethod
    def one(cls) -> "QLaurent":
        return cls(Q_RING.one)

    @classmethod
    def power(cls, exponent: int) -> "QLaurent":
        return cls(Q_RING.one, exponent)

    def terms(self) -> Dict[int, int]:
        """{exponent: coefficient}, ascending in exponent."""
        found = {exps[0] + self.valuation: int(c) for exps, c in self.poly.items()}
        return dict(sorted(found.items()))

    def _aligned(self, other: "QLaurent") -> Tuple[PolyElement, PolyElement, int]:
        low = min(self.valuation, other.valuation)
        q = Q_RING.gens[0]
        return self.poly * q ** (self.valuation - low), other.poly * q ** (other.valuation - low), low

    def __add__(self, other: "QLaurent") -> "QLaurent":
        left, right, low = self._aligned(other)
        return QLaurent(left + right, low)

    def __sub__(self, other: "QLaurent") -> "QLaurent":
        left, right, low = self._aligned(other)
        return QLaurent(left - right, low)

    def __neg__(self) -> "QLaurent":
        return QLaurent(-self.poly, self.valuation)

    def __mul__(self, other) -> "QLaurent":
        if isinstance(other, int):
            return QLaurent(self.poly * other, self.valuation)
        return QLaurent(self.poly * other.poly, self.valuation + other.valuation)

    __rmul__ = __mul__

    def exquo(self, other: "QLaurent") -> "QLaurent":
        """Exact division; raises if other does not divide self."""
        return QLaurent(self.poly.exquo(other.poly), self.valuation - other.valuation)

    def bar(self) -> "QLaurent":
        """q ↦ q⁻¹."""
        return QLaurent.from_terms({-e: c for e, c in self.terms().items()})

    def is_bar_invariant(self) -> bool:
        return self == self.bar()

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QLaurent(Q_RING(other))
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self.valuation == other.valuation and self.poly == other.poly

    def __hash__(self) -> int:
        return hash(tuple(self.terms().items()))

    def __bool__(self) -> bool:
        return bool(self.poly)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.terms().items())

    def __str__(self) -> str:
        """Ascending exponents: `q^-1 + q`, `2*q^3`, `1`."""
        pieces = []
        for exponent, coeff in self.terms().items():
            if exponent == 0:
                body = str(abs(coeff))
            else:
                power = "q" if exponent == 1 else f"q^{exponent}"
                body = power if abs(coeff) == 1 else f"{abs(coeff)}*{power}"
            sign = "-" if coeff < 0 else "+"
            pieces.append((sign, body))
        if not pieces:
            return "0"
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"QLaurent({self})"


@lru_cache(maxsize=None)
def quantum_int(n: int) -> QLaurent:
    """[n] = q^{n−1} + q^{n−3} + … + q^{1−n}."""
    if n < 0:
        raise PartitionError(f"quantum integer needs n ≥ 0, got {n}")
    return QLaurent.from_terms({n - 1 - 2 * k: 1 for k in range(n)})


@lru_cache(maxsize=None)
def quantum_factorial(n: int) -> QLaurent:
    if n < 0:
        raise PartitionError(f"quantum factorial needs n ≥ 0, got {n}")
    result = QLaurent.one()
    for k in range(1, n + 1):
        result = result * quantum_int(k)
    return result


@lru_cache(maxsize=None)
def quantum_binomial(n: int, k: int) -> QLaurent:
    """[n choose k] = [n]! / ([k]! [n−k]!), divided exactly."""
    if n < 0 or k < 0 or k > n:
        raise PartitionError(f"quantum binomial needs 0 ≤ k ≤ n, got n={n}, k={k}")
    return quantum_factorial(n).exquo(quantum_factorial(k) * quantum_factorial(n - k))


@lru_cache(maxsize=None)
def quantum_binomial_partition(a: int, b: int) -> QLaurent:
    """Σ_{α∈P(a,b)} q^{2|α|−ab}."""
    if a < 0 or b < 0:
        raise PartitionError(f"rectangle dimensions must be nonnegative, got {a}x{b}")
    counts: Dict[int, int] = {}
    for alpha in enumerate_partitions(a, b):
        exponent = 2 * alpha.size - a * b
        counts[exponent] = counts.get(exponent, 0) + 1
    return QLaurent.from_terms(counts)


def q_divided_power_product(a: int, b: int) -> QLaurent:
    """The scalar relating E^{(a)}E^{(b)} to E^{(a+b)}: [a+b choose a]."""
    return quantum_binomial(a + b, a)
