"""Thick Reidemeister moves and the square-flattening relations."""

from math import comb
from itertools import product
from typing import List, Optional, Tuple

from src.identities.base import IdentitySpec, Params, Sides, color_pairs, identity_registry
from src.klr.cartan import relation_kind
from src.symfunc.littlewood import multi_lr_coeff
from src.symfunc.partitions import Partition, conjugate, enumerate_partitions, hat, rectangle
from src.thick.diagram import (
    Sum,
    ThickDiagram,
    at,
    compose,
    cross,
    identity,
    linear_combination,
    merge,
    split,
    tensor,
    thick_dot,
    thick_object,
)
from src.thick.engine import EngineConfig
from src.utils.errors import ColorPatternError


def _require_adjacent(i: int, j: int) -> None:
    if relation_kind(i, j) != "adjacent":
        raise ColorPatternError(f"colours {i} and {j} are not adjacent")


def build_thick_r2(a: int, b: int, colors: Tuple[int, int]) -> Tuple[ThickDiagram, Sum]:
    """X_{b,a} ∘ X_{a,b} on (i^a, j^b) against Σ_{α∈P(a,b)} π_α ⊗ π_α̂."""
    i, j = colors
    _require_adjacent(i, j)
    lhs = compose(cross(j, b, i, a), cross(i, a, j, b))
    obj = thick_object((i, a), (j, b))
    terms = [(1, tensor(thick_dot(i, a, alpha), thick_dot(j, b, hat(alpha, a, b)))) for alpha in enumerate_partitions(a, b)]
    return lhs, linear_combination(terms, obj, obj)


def build_thick_r2_flipped(a: int, b: int, colors: Tuple[int, int]) -> Tuple[ThickDiagram, Sum]:
    """The mirror image: X_{a,b} ∘ X_{b,a} on (j^b, i^a) against Σ π_α̂ ⊗ π_α."""
    i, j = colors
    _require_adjacent(i, j)
    lhs = compose(cross(i, a, j, b), cross(j, b, i, a))
    obj = thick_object((j, b), (i, a))
    terms = [(1, tensor(thick_dot(j, b, hat(alpha, a, b)), thick_dot(i, a, alpha))) for alpha in enumerate_partitions(a, b)]
    return lhs, linear_combination(terms, obj, obj)


def square(
    colors: Tuple[int, int], a: int, b: int, c: int, left: int, right: int,
    alpha: Partition, beta: Partition, gamma_bar: Partition,
) -> ThickDiagram:
    """Bottom (i^a, j^c, i^b) to top (i^{left+b−right}, j^c, i^{a−left+right}).

    `left` strands peel off the a strand and `right` off the b strand; the rest
    cross as in a thick R3 move, decorated by π_α, π_β and π_γ̄, then merge back.
    """
    i, j = colors
    a_out, b_out = a - left, b - right
    return compose(
        tensor(merge(i, left, b_out), identity((j, c)), merge(i, a_out, right)),
        at(cross(i, a_out, j, c), left=[(i, left), (i, b_out)], right=[(i, right)]),
        at(cross(i, a_out, i, b_out), left=[(i, left)], right=[(j, c), (i, right)]),
        at(cross(j, c, i, b_out), left=[(i, left), (i, a_out)], right=[(i, right)]),
        tensor(
            thick_dot(i, left, alpha), identity((i, a_out)), thick_dot(j, c, gamma_bar),
            identity((i, b_out)), thick_dot(i, right, beta),
        ),
        tensor(split(i, left, a_out), identity((j, c)), split(i, b_out, right)),
    )


def _square_sum(
    colors: Tuple[int, int], a: int, b: int, c: int, terms: List[Tuple[int, int, int, int]]
) -> Sum:
    """Σ over (left, right, rows, cols) of Σ_{α,β,γ ∈ P(rows, cols)} c^{K_{rows,cols}}_{αβγ} · square."""
    i, j = colors
    summands = []
    for left, right, rows, cols in terms:
        target = rectangle(rows, cols)
        shapes = enumerate_partitions(rows, cols)
        for alpha, beta, gamma in product(shapes, repeat=3):
            if alpha.length > left or beta.length > right:
                continue
            coeff = multi_lr_coeff((alpha, beta, gamma), target)
            if coeff:
                summands.append((coeff, square(colors, a, b, c, left, right, alpha, beta, conjugate(gamma))))
    source = thick_object((i, a), (j, c), (i, b))
    top = summands[0][1].target if summands else source
    return linear_combination(summands, source, top)


def build_thick_r3(a: int, b: int, c: int, colors: Tuple[int, int]) -> Tuple[ThickDiagram, Sum]:
    """Triple crossing on (i^a, j^c, i^b) against Σ_t Σ_{α,β,γ∈P(t,c−t)} c^{K_t}_{αβγ} · square_t."""
    i, j = colors
    _require_adjacent(i, j)
    lhs = compose(
        at(cross(j, c, i, b), right=[(i, a)]),
        at(cross(i, a, i, b), left=[(j, c)]),
        at(cross(i, a, j, c), right=[(i, b)]),
    )
    terms = [(t, t, t, c - t) for t in range(min(a, b, c) + 1)]
    rhs = _square_sum(colors, a, b, c, terms)
    return lhs, _retarget(rhs, lhs)


def build_square_flatten_plus(a: int, b: int, c: int, x: int, colors: Tuple[int, int]) -> Tuple[ThickDiagram, Sum]:
    """(i^a, j^c, i^{b+x}) to (i^b, j^c, i^{a+x}) through one thick edge of thickness a+b+x."""
    i, j = colors
    _require_adjacent(i, j)
    lhs = compose(
        at(cross(j, c, i, b), right=[(i, a + x)]),
        at(split(i, b, a + x), left=[(j, c)]),
        at(merge(i, a, b + x), left=[(j, c)]),
        at(cross(i, a, j, c), right=[(i, b + x)]),
    )
    terms = [(t, t + x, t, c - x - t) for t in range(min(a, b, c - x) + 1)]
    rhs = _square_sum(colors, a, b + x, c, terms)
    return lhs, _retarget(rhs, lhs)


def build_square_flatten_minus(a: int, b: int, c: int, x: int, colors: Tuple[int, int]) -> Tuple[ThickDiagram, Sum]:
    """(i^{a+x}, j^c, i^b) to (i^{b+x}, j^c, i^a) through one thick edge of thickness a+b+x."""
    i, j = colors
    _require_adjacent(i, j)
    lhs = compose(
        at(cross(j, c, i, b + x), right=[(i, a)]),
        at(split(i, b + x, a), left=[(j, c)]),
        at(merge(i, a + x, b), left=[(j, c)]),
        at(cross(i, a + x, j, c), right=[(i, b)]),
    )
    terms = [(t + x, t, t + x, c - t) for t in range(min(a, b, c) + 1)]
    rhs = _square_sum(colors, a + x, b, c, terms)
    return lhs, _retarget(rhs, lhs)


def _retarget(rhs: Sum, lhs: ThickDiagram) -> Sum:
    """Give an empty sum the boundary of the other side."""
    if rhs.terms:
        return rhs
    return linear_combination([], lhs.source, lhs.target)


def _pairs(rank: Optional[int]) -> List[Tuple[int, int]]:
    return color_pairs("adjacent", rank)


class ThickR2(IdentitySpec):
    def __init__(self, flipped: bool = False):
        name = "thick_r2_flipped" if flipped else "thick_r2"
        super().__init__(name, "Thick R2 move" + (", mirrored" if flipped else ""), "thick R2 move")
        self.flipped = flipped

    def grid(self, max_strands: Optional[int] = None, rank: Optional[int] = None) -> List[Params]:
        total = min(self._budget(max_strands), 5)
        return [
            {"a": a, "b": b, "colors": list(colors)}
            for colors in _pairs(self._rank(rank))
            for a in range(total + 1)
            for b in range(total + 1)
            if 1 <= a + b <= total
        ]

    def is_valid(self, params: Params) -> bool:
        i, j = params["colors"]
        return relation_kind(i, j) == "adjacent"

    def thin_strands(self, params: Params) -> int:
        return params["a"] + params["b"]

    def build(self, params: Params, engine: EngineConfig) -> Sides:
        builder = build_thick_r2_flipped if self.flipped else build_thick_r2
        lhs, rhs = builder(params["a"], params["b"], tuple(params["colors"]))
        return Sides(lhs, rhs)


class ThickR2Census(IdentitySpec):
    """The thick R2 right side has binomial(a+b, a) terms."""

    def __init__(self):
        super().__init__("thick_r2_census", "Term count of the thick R2 right side", "thick R2 move")

    def grid(self, max_strands: Optional[int] = None, rank: Optional[int] = None) -> List[Params]:
        total = min(self._budget(max_strands), 5)
        return [{"a": a, "b": b} for a in range(total + 1) for b in range(total + 1) if 1 <= a + b <= total]

    def build(self, params: Params, engine: EngineConfig) -> Sides:
        a, b = params["a"], params["b"]
        _, rhs = build_thick_r2(a, b, (1, 2))
        return Sides(len(rhs.terms), comb(a + b, a), "scalar")


class ThickR3(IdentitySpec):
    """Thick R3 move; `family` restricts to the a=c=1 or c=1 special cases."""

    FAMILIES = {
        None: "thick_r3",
        "unit_ends": "thick_r3_unit_ends",
        "unit_right": "thick_r3_unit_right",
    }

    def __init__(self, family: Optional[str] = None):
        super().__init__(self.FAMILIES[family], "Thick R3 move" + (f" ({family} family)" if family else ""), "thick R3 move")
        self.family = family

    def _shapes(self, total: int) -> List[Tuple[int, int, int]]:
        if self.family == "unit_ends":
            return [(1, b, 1) for b in range(1, 5) if b + 2 <= total]
        if self.family == "unit_right":
            return [(a, b, 1) for a in range(1, 4) for b in range(1, 3) if a + b + 1 <= total]
        return [
            (a, b, c)
            for a in range(1, total + 1) for b in range(1, total + 1) for c in range(1, total + 1)
            if a + b + c <= total
        ]

    def grid(self, max_strands: Optional[int] = None, rank: Optional[int] = None) -> List[Params]:
        total = min(self._budget(max_strands), 6)
        return [
            {"a": a, "b": b, "c": c, "colors": list(colors)}
            for colors in _pairs(self._rank(rank))
            for a, b, c in self._shapes(total)
        ]

    def is_valid(self, params: Params) -> bool:
        i, j = params["colors"]
        return relation_kind(i, j) == "adjacent"

    def thin_strands(self, params: Params) -> int:
        return params["a"] + params["b"] + params["c"]

    def build(self, params: Params, engine: EngineConfig) -> Sides:
        lhs, rhs = build_thick_r3(params["a"], params["b"], params["c"], tuple(params["colors"]))
        return Sides(lhs, rhs)


class SquareFlatten(IdentitySpec):
    """Two thick crossings joined by a thick edge flatten into a sum of squares."""

    def __init__(self, sign: str):
        super().__init__(f"square_flatten_{sign}", f"Square flattening, {sign} case", "square flattening")
        self.sign = sign

    def grid(self, max_strands: Optional[int] = None, rank: Optional[int] = None) -> List[Params]:
        total = min(self._budget(max_strands), 6)
        return [
            {"a": a, "b": b, "c": c, "x": x, "colors": list(colors)}
            for colors in _pairs(self._rank(rank))
            for a in range(1, total + 1) for b in range(1, total + 1)
            for c in range(1, total + 1) for x in range(0, total + 1)
            if a + b + c + x <= total and (self.sign == "minus" or x <= c)
        ]

    def is_valid(self, params: Params) -> bool:
        i, j = params["colors"]
        if self.sign == "plus" and params["x"] > params["c"]:
            return False
        return relation_kind(i, j) == "adjacent"

    def thin_strands(self, params: Params) -> int:
        return params["a"] + params["b"] + params["c"] + params["x"]

    def build(self, params: Params, engine: EngineConfig) -> Sides:
        builder = build_square_flatten_plus if self.sign == "plus" else build_square_flatten_minus
        lhs, rhs = builder(params["a"], params["b"], params["c"], params["x"], tuple(params["colors"]))
        return Sides(lhs, rhs)


class SquareFlattenAtZero(IdentitySpec):
    """At x = 0 the flattened left side equals the thick R3 right side."""

    def __init__(self):
        super().__init__("square_flatten_x0", "Square flattening at x = 0 against thick R3", "square flattening")

    def grid(self, max_strands: Optional[int] = None, rank: Optional[int] = None) -> List[Params]:
        total = min(self._budget(max_strands), 6)
        return [
            {"a": a, "b": b, "c": c, "sign": sign, "colors": list(colors)}
            for colors in _pairs(self._rank(rank))
            for sign in ("plus", "minus")
            for a in range(1, total + 1) for b in range(1, total + 1) for c in range(1, total + 1)
            if a + b + c <= total
        ]

    def thin_strands(self, params: Params) -> int:
        return params["a"] + params["b"] + params["c"]

    def build(self, params: Params, engine: EngineConfig) -> Sides:
        a, b, c, colors = params["a"], params["b"], params["c"], tuple(params["colors"])
        builder = build_square_flatten_plus if params["sign"] == "plus" else build_square_flatten_minus
        flattened, _ = builder(a, b, c, 0, colors)
        _, r3_rhs = build_thick_r3(a, b, c, colors)
        return Sides(flattened, r3_rhs)


thick_r2 = ThickR2()
identity_registry.register(thick_r2)

thick_r2_flipped = ThickR2(flipped=True)
identity_registry.register(thick_r2_flipped)

thick_r2_census = ThickR2Census()
identity_registry.register(thick_r2_census)

for family in ThickR3.FAMILIES:
    identity_registry.register(ThickR3(family))

square_flatten_plus = SquareFlatten("plus")
identity_registry.register(square_flatten_plus)

square_flatten_minus = SquareFlatten("minus")
identity_registry.register(square_flatten_minus)

square_flatten_x0 = SquareFlattenAtZero()
identity_registry.register(square_flatten_x0)
