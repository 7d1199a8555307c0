"""Partitions and the rectangle combinatorics of thick-edge decorations."""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, List, Optional, Tuple

from src.utils.errors import ParseError, PartitionError


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of nonnegative integers, zeros stripped."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise PartitionError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise PartitionError(f"parts of {parts} are not weakly decreasing")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @property
    def size(self) -> int:
        """|α|, the number of boxes."""
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of nonzero parts."""
        return len(self.parts)

    def part(self, i: int) -> int:
        """The i-th part, 1-based, zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def padded(self, k: int) -> Tuple[int, ...]:
        """Parts padded with zeros (or truncated) to exactly k entries."""
        return tuple(self.part(i) for i in range(1, k + 1))

    def contains(self, other: "Partition") -> bool:
        """True iff other ⊂ self box-wise."""
        return all(other.part(i) <= self.part(i) for i in range(1, other.length + 1))

    def fits(self, rows: int, cols: int) -> bool:
        """True iff self ∈ P(rows, cols)."""
        return self.length <= rows and (not self.parts or self.parts[0] <= cols)

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Graded lexicographic key: by size, then larger first parts first."""
        return (self.size, tuple(-p for p in self.parts))

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __str__(self) -> str:
        if not self.parts:
            return "()"
        return "(" + ",".join(str(p) for p in self.parts) + ")"


EMPTY = Partition()


def rectangle(rows: int, cols: int) -> Partition:
    """K_{rows,cols}: the full rectangle with `rows` parts equal to `cols`."""
    if rows < 0 or cols < 0:
        raise PartitionError(f"rectangle dimensions must be nonnegative, got {rows}x{cols}")
    return Partition((cols,) * rows)


@lru_cache(maxsize=None)
def enumerate_partitions(rows: int, cols: int) -> Tuple[Partition, ...]:
    """P(rows, cols), the partitions fitting in a rows x cols rectangle, graded-lex ordered."""
    if rows < 0 or cols < 0:
        raise PartitionError(f"rectangle dimensions must be nonnegative, got {rows}x{cols}")

    def build(remaining: int, bound: int) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(bound, -1, -1):
            for rest in build(remaining - 1, first):
                yield (first,) + rest

    found = {Partition(parts) for parts in build(rows, cols)}
    return tuple(sorted(found, key=Partition.sort_key))


@lru_cache(maxsize=None)
def partitions_of(n: int, max_parts: Optional[int] = None, max_part: Optional[int] = None) -> Tuple[Partition, ...]:
    """All partitions of n, optionally bounded in length and in largest part."""
    if n < 0:
        return ()
    max_parts = n if max_parts is None else max_parts
    max_part = n if max_part is None else max_part

    def build(remaining: int, bound: int, slots: int) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(bound, remaining), 0, -1):
            for rest in build(remaining - first, first, slots - 1):
                yield (first,) + rest

    return tuple(Partition(parts) for parts in build(n, max_part, max_parts))


def conjugate(alpha: Partition) -> Partition:
    """The transpose: ᾱ_j = #{i : α_i ≥ j}."""
    if not alpha.parts:
        return EMPTY
    return Partition(tuple(sum(1 for p in alpha.parts if p >= j) for j in range(1, alpha.parts[0] + 1)))


def rect_complement(gamma: Partition, rows: int, cols: int) -> Partition:
    """K_{rows,cols} − γ = (cols − γ_rows, …, cols − γ_1)."""
    if not gamma.fits(rows, cols):
        raise PartitionError(f"{gamma} does not fit in K_{{{rows},{cols}}}")
    return Partition(tuple(cols - gamma.part(i) for i in range(rows, 0, -1)))


def hat(alpha: Partition, rows: int, cols: int) -> Partition:
    """α̂: the conjugate of the complement of α in the rows x cols rectangle; lies in P(cols, rows)."""
    return conjugate(rect_complement(alpha, rows, cols))


def rect_plus(nu: Partition, rows: int, cols: int) -> Partition:
    """ν + K_{rows,cols} = (ν_1 + cols, …, ν_rows + cols) for ν ∈ P(rows)."""
    if nu.length > rows:
        raise PartitionError(f"{nu} has more than {rows} parts")
    return Partition(tuple(nu.part(i) + cols for i in range(1, rows + 1)))


def parse_partition(text: str) -> Partition:
    """Read the comma-separated CLI form; `0` (or an empty string) is the empty partition."""
    cleaned = text.strip()
    if cleaned in ("", "0", "()", "∅"):
        return EMPTY
    cleaned = cleaned.strip("()")
    parts: List[int] = []
    offset = 0
    for token in cleaned.split(","):
        stripped = token.strip()
        if not stripped.isdigit():
            raise ParseError(f"expected a nonnegative integer part, got {token!r}", offset)
        parts.append(int(stripped))
        offset += len(token) + 1
    try:
        return Partition(tuple(parts))
    except PartitionError as exc:
        raise ParseError(str(exc), 0) from exc


def sorted_partitions(partitions: Iterable[Partition]) -> List[Partition]:
    return sorted(partitions, key=Partition.sort_key)
