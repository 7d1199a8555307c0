"""Thick diagrams as composition trees, and their explosion to thin elements."""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence, Tuple

from src.klr.cartan import pairing
from src.klr.element import ThinElement, identity as thin_identity, tensor as thin_tensor, zero
from src.klr.reduction import reduce, stack
from src.symfunc.partitions import EMPTY, Partition
from src.thick.engine import EngineConfig
from src.thick import generators
from src.utils.errors import ThicknessMismatchError

Strand = Tuple[int, int]


@dataclass(frozen=True)
class ThickObject:
    """A sequence of (colour, thickness) labels with a grading shift tag.

    The shift is carried along but plays no part in equality.
    """

    strands: Tuple[Strand, ...] = ()
    shift: int = field(default=0, compare=False)

    def __post_init__(self):
        strands = tuple((int(c), int(a)) for c, a in self.strands)
        if any(a < 1 for _, a in strands):
            raise ThicknessMismatchError(f"thicknesses must be positive in {strands}")
        object.__setattr__(self, "strands", strands)

    @property
    def thin_colors(self) -> Tuple[int, ...]:
        """Each colour repeated by its thickness."""
        return tuple(c for c, a in self.strands for _ in range(a))

    def __add__(self, other: "ThickObject") -> "ThickObject":
        return ThickObject(self.strands + other.strands, self.shift + other.shift)

    def __str__(self) -> str:
        body = " ".join(f"E{c}^({a})" for c, a in self.strands) or "1"
        return f"{body}{{{self.shift}}}" if self.shift else body


def thick_object(*strands: Strand, shift: int = 0) -> ThickObject:
    """Build an object, erasing thickness-0 strands."""
    return ThickObject(tuple((c, a) for c, a in strands if a), shift)


class ThickDiagram:
    """Base of the composition tree; subclasses are frozen dataclasses."""

    source: ThickObject
    target: ThickObject

    @property
    def degree(self) -> int:
        raise NotImplementedError

    def __matmul__(self, other: "ThickDiagram") -> "ThickDiagram":
        """self ∘ other (other below)."""
        return compose(self, other)

    def __or__(self, other: "ThickDiagram") -> "ThickDiagram":
        """self ⊗ other (other to the right)."""
        return tensor(self, other)


@dataclass(frozen=True)
class Identity(ThickDiagram):
    obj: ThickObject

    @property
    def source(self) -> ThickObject:
        return self.obj

    @property
    def target(self) -> ThickObject:
        return self.obj

    @property
    def degree(self) -> int:
        return 0


@dataclass(frozen=True)
class Merge(ThickDiagram):
    color: int
    a: int
    b: int

    @property
    def source(self) -> ThickObject:
        return ThickObject(((self.color, self.a), (self.color, self.b)))

    @property
    def target(self) -> ThickObject:
        return ThickObject(((self.color, self.a + self.b),))

    @property
    def degree(self) -> int:
        return -2 * self.a * self.b


@dataclass(frozen=True)
class Split(ThickDiagram):
    color: int
    a: int
    b: int

    @property
    def source(self) -> ThickObject:
        return ThickObject(((self.color, self.a + self.b),))

    @property
    def target(self) -> ThickObject:
        return ThickObject(((self.color, self.a), (self.color, self.b)))

    @property
    def degree(self) -> int:
        return 0


@dataclass(frozen=True)
class ThickDot(ThickDiagram):
    color: int
    a: int
    alpha: Partition

    @property
    def source(self) -> ThickObject:
        return ThickObject(((self.color, self.a),))

    @property
    def target(self) -> ThickObject:
        return self.source

    @property
    def degree(self) -> int:
        return 2 * self.alpha.size


@dataclass(frozen=True)
class Exploded(ThickDiagram):
    """A thick strand opened into thin strands carrying `dots`, then closed again."""

    color: int
    dots: Tuple[int, ...]

    @property
    def source(self) -> ThickObject:
        return ThickObject(((self.color, len(self.dots)),))

    @property
    def target(self) -> ThickObject:
        return self.source

    @property
    def degree(self) -> int:
        a = len(self.dots)
        return 2 * sum(self.dots) - a * (a - 1)


@dataclass(frozen=True)
class ThickCross(ThickDiagram):
    color_left: int
    a: int
    color_right: int
    b: int

    @property
    def source(self) -> ThickObject:
        return ThickObject(((self.color_left, self.a), (self.color_right, self.b)))

    @property
    def target(self) -> ThickObject:
        return ThickObject(((self.color_right, self.b), (self.color_left, self.a)))

    @property
    def degree(self) -> int:
        if self.color_left == self.color_right:
            return -2 * self.a * self.b
        return -self.a * self.b * pairing(self.color_left, self.color_right)


@dataclass(frozen=True)
class Compose(ThickDiagram):
    """upper ∘ lower."""

    upper: ThickDiagram
    lower: ThickDiagram

    def __post_init__(self):
        if self.lower.target != self.upper.source:
            raise ThicknessMismatchError(f"cannot stack {self.upper.source} on top of {self.lower.target}")

    @property
    def source(self) -> ThickObject:
        return self.lower.source

    @property
    def target(self) -> ThickObject:
        return self.upper.target

    @property
    def degree(self) -> int:
        return self.upper.degree + self.lower.degree


@dataclass(frozen=True)
class Tensor(ThickDiagram):
    left: ThickDiagram
    right: ThickDiagram

    @property
    def source(self) -> ThickObject:
        return self.left.source + self.right.source

    @property
    def target(self) -> ThickObject:
        return self.left.target + self.right.target

    @property
    def degree(self) -> int:
        return self.left.degree + self.right.degree


@dataclass(frozen=True)
class Sum(ThickDiagram):
    """An integer combination of diagrams with one boundary."""

    terms: Tuple[Tuple[int, ThickDiagram], ...]
    boundary: Tuple[ThickObject, ThickObject]

    def __post_init__(self):
        source, target = self.boundary
        for _, diagram in self.terms:
            if diagram.source != source or diagram.target != target:
                raise ThicknessMismatchError(
                    f"summand {diagram.source} -> {diagram.target} does not match {source} -> {target}"
                )

    @property
    def source(self) -> ThickObject:
        return self.boundary[0]

    @property
    def target(self) -> ThickObject:
        return self.boundary[1]

    @property
    def degree(self) -> int:
        degrees = {diagram.degree for coeff, diagram in self.terms if coeff}
        if len(degrees) > 1:
            raise ThicknessMismatchError(f"summands have degrees {sorted(degrees)}")
        return degrees.pop() if degrees else 0


# Builders. Thickness-0 strands are erased before a node is created.

def identity(*strands: Strand) -> ThickDiagram:
    return Identity(thick_object(*strands))


def merge(color: int, a: int, b: int) -> ThickDiagram:
    if a == 0 or b == 0:
        return identity((color, a + b))
    return Merge(color, a, b)


def split(color: int, a: int, b: int) -> ThickDiagram:
    if a == 0 or b == 0:
        return identity((color, a + b))
    return Split(color, a, b)


def thick_dot(color: int, a: int, alpha: Partition = EMPTY) -> ThickDiagram:
    if a == 0:
        return identity() if not alpha else linear_combination([], ThickObject(), ThickObject())
    if not alpha:
        return identity((color, a))
    return ThickDot(color, a, alpha)


def exploded(color: int, dots: Sequence[int]) -> ThickDiagram:
    dots = tuple(dots)
    return Exploded(color, dots) if dots else identity()


def cross(color_left: int, a: int, color_right: int, b: int) -> ThickDiagram:
    if a == 0 or b == 0:
        return identity((color_left, a), (color_right, b))
    return ThickCross(color_left, a, color_right, b)


def compose(*diagrams: ThickDiagram) -> ThickDiagram:
    """diagrams[0] ∘ diagrams[1] ∘ …, top first."""
    result = diagrams[-1]
    for diagram in reversed(diagrams[:-1]):
        if isinstance(diagram, Identity) and diagram.obj == result.target:
            continue
        if isinstance(result, Identity) and result.obj == diagram.source:
            result = diagram
            continue
        result = Compose(diagram, result)
    return result


def tensor(*diagrams: ThickDiagram) -> ThickDiagram:
    """diagrams placed left to right; empty identities drop out."""
    kept = [d for d in diagrams if not (isinstance(d, Identity) and not d.obj.strands)]
    if not kept:
        return identity()
    result = kept[0]
    for diagram in kept[1:]:
        if isinstance(result, Identity) and isinstance(diagram, Identity):
            result = Identity(result.obj + diagram.obj)
        else:
            result = Tensor(result, diagram)
    return result


def linear_combination(terms: Sequence[Tuple[int, ThickDiagram]], source: ThickObject, target: ThickObject) -> Sum:
    return Sum(tuple((int(c), d) for c, d in terms if c), (source, target))


def at(diagram: ThickDiagram, left: Sequence[Strand] = (), right: Sequence[Strand] = ()) -> ThickDiagram:
    """diagram with identity strands on either side."""
    return tensor(identity(*left), diagram, identity(*right))


@lru_cache(maxsize=None)
def explode(diagram: ThickDiagram, engine: EngineConfig = generators.DEFAULT_ENGINE) -> ThinElement:
    """Compile a thick diagram to a reduced thin element."""
    if isinstance(diagram, Identity):
        parts = [generators.idempotent(a, c, engine) for c, a in diagram.obj.strands]
        result = parts[0] if parts else thin_identity(())
        for part in parts[1:]:
            result = thin_tensor(result, part)
        return result
    if isinstance(diagram, Merge):
        return generators.merge(diagram.a, diagram.b, diagram.color, engine)
    if isinstance(diagram, Split):
        return generators.split(diagram.a, diagram.b, diagram.color, engine)
    if isinstance(diagram, ThickDot):
        return generators.thick_dot(diagram.a, diagram.alpha, diagram.color, engine)
    if isinstance(diagram, Exploded):
        return generators.exploded(diagram.color, diagram.dots, engine)
    if isinstance(diagram, ThickCross):
        return generators.thick_cross(diagram.color_left, diagram.a, diagram.color_right, diagram.b, engine)
    if isinstance(diagram, Compose):
        return stack(explode(diagram.upper, engine), explode(diagram.lower, engine))
    if isinstance(diagram, Tensor):
        return thin_tensor(explode(diagram.left, engine), explode(diagram.right, engine))
    if isinstance(diagram, Sum):
        result = zero(diagram.source.thin_colors, diagram.target.thin_colors)
        for coeff, term in diagram.terms:
            result = result + explode(term, engine).scale(coeff)
        return reduce(result)
    raise TypeError(f"cannot explode {type(diagram).__name__}")
