"""Exception hierarchy shared by every package."""


class ThickCalcError(Exception):
    """Base class for all errors raised by thickcalc."""


class PartitionError(ThickCalcError, ValueError):
    """A partition lies outside the rectangle or range an operation requires."""


class BoundaryMismatchError(ThickCalcError, ValueError):
    """Two thin elements were combined along incompatible colour sequences."""


class ParseError(ThickCalcError, ValueError):
    """Malformed text for a partition or a thin element."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ThicknessMismatchError(ThickCalcError, ValueError):
    """Thick diagrams composed along objects with different (colour, thickness) labels."""


class ColorPatternError(ThickCalcError, ValueError):
    """An identity was requested for colours it makes no claim about."""


class CacheCorruptionError(ThickCalcError):
    """The splitter cache file failed its header or checksum test."""


class DegreeMismatchError(ThickCalcError, ValueError):
    """A thin element was built from terms of different degrees."""
