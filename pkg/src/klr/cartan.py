"""Cartan data of sl(n): colours 1..n−1 with the symmetric pairing i·j."""

from dataclasses import dataclass
from typing import Sequence, Tuple

from src.utils.errors import BoundaryMismatchError


def pairing(i: int, j: int) -> int:
    """i·j = 2 on the diagonal, −1 for neighbours, 0 otherwise."""
    if i == j:
        return 2
    if abs(i - j) == 1:
        return -1
    return 0


def relation_kind(i: int, j: int) -> str:
    """'same', 'adjacent' or 'distant', the three cases of every local relation."""
    p = pairing(i, j)
    if p == 2:
        return "same"
    if p == -1:
        return "adjacent"
    return "distant"


@dataclass(frozen=True)
class CartanSln:
    n: int = 4

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"sl(n) needs n ≥ 2, got {self.n}")

    @property
    def colors(self) -> Tuple[int, ...]:
        return tuple(range(1, self.n))

    def pairing(self, i: int, j: int) -> int:
        return pairing(i, j)

    def check_colors(self, colors: Sequence[int]) -> Tuple[int, ...]:
        """Return colors as a tuple, rejecting values outside 1..n−1."""
        colors = tuple(int(c) for c in colors)
        bad = [c for c in colors if not 1 <= c < self.n]
        if bad:
            raise BoundaryMismatchError(f"colours {bad} are not colours of sl({self.n})")
        return colors
