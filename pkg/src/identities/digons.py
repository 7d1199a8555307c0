"""Decorated digons, explosion antisymmetry, skew splitters and dots sliding through crossings."""

from itertools import permutations, product
from typing import List, Optional

from src.identities.base import IdentitySpec, Params, Sides, color_pairs, identity_registry
from src.klr.permutations import sign
from src.symfunc.littlewood import skew_schur
from src.symfunc.partitions import Partition, enumerate_partitions, hat, parse_partition, partitions_of, rect_complement
from src.symfunc.schur import schur_expand, straighten
from src.thick.diagram import (
    ThickDiagram,
    compose,
    cross,
    exploded,
    identity,
    linear_combination,
    merge,
    split,
    tensor,
    thick_dot,
    thick_object,
)
from src.thick.engine import EngineConfig


def digon(color: int, a: int, b: int, alpha: Partition, beta: Partition) -> ThickDiagram:
    """merge_{a,b} ∘ (π_α ⊗ π_β) ∘ split_{a,b}."""
    return compose(merge(color, a, b), tensor(thick_dot(color, a, alpha), thick_dot(color, b, beta)), split(color, a, b))


def _scalar_strand(color: int, thickness: int, coeff: int, shape: Partition) -> ThickDiagram:
    obj = thick_object((color, thickness))
    if not coeff:
        return linear_combination([], obj, obj)
    return linear_combination([(coeff, thick_dot(color, thickness, shape))], obj, obj)


class DigonEvaluation(IdentitySpec):
    """Decorated digons collapse to a single decoration on the merged strand.

    variant "rectangle": α ∈ P(a,b), β ∈ P(b,a) gives δ_{β,α̂}(−1)^{|β|} e_{a+b}.
    variant "dotless": the undecorated digon is zero.
    variant "general": larger decorations give ±π_γ, γ read off by straightening
    (α_1 − b, …, α_a − b, β_1, …, β_b).
    """

    def __init__(self):
        super().__init__("digon_eval", "Evaluation of decorated digons", "digon lemma")

    def grid(self, max_strands: Optional[int] = None, rank: Optional[int] = None) -> List[Params]:
        budget = self._budget(max_strands)
        tuples: List[Params] = []
        for a, b in product(range(1, 3), repeat=2):
            if a + b > budget:
                continue
            for alpha in enumerate_partitions(a, b):
                for beta in enumerate_partitions(b, a):
                    tuples.append({"variant": "rectangle", "a": a, "b": b, "alpha": str(alpha), "beta": str(beta), "color": 1})
            for alpha in enumerate_partitions(a, b + 1):
                for beta in enumerate_partitions(b, a + 1):
                    if alpha.fits(a, b) and beta.fits(b, a):
                        continue
                    tuples.append({"variant": "general", "a": a, "b": b, "alpha": str(alpha), "beta": str(beta), "color": 1})
        for a in range(1, min(budget, 5)):
            for b in range(1, min(budget, 5) - a + 1):
                tuples.append({"variant": "dotless", "a": a, "b": b, "alpha": "()", "beta": "()", "color": 1})
        return tuples

    def thin_strands(self, params: Params) -> int:
        return params["a"] + params["b"]

    def build(self, params: Params, engine: EngineConfig) -> Sides:
        a, b, i = params["a"], params["b"], params["color"]
        alpha, beta = parse_partition(params["alpha"]), parse_partition(params["beta"])
        lhs = digon(i, a, b, alpha, beta)
        if params["variant"] == "rectangle":
            coeff = (-1) ** beta.size if beta == hat(alpha, a, b) else 0
            return Sides(lhs, _scalar_strand(i, a + b, coeff, Partition()))
        if params["variant"] == "dotless":
            return Sides(lhs, _scalar_strand(i, a + b, 0, Partition()))
        sequence = [alpha.part(r) - b for r in range(1, a + 1)] + [beta.part(r) for r in range(1, b + 1)]
        coeff, gamma = straighten(sequence)
        return Sides(lhs, _scalar_strand(i, a + b, coeff, gamma))


class ExplodeAntisymmetry(IdentitySpec):
    """An exploded thick strand is antisymmetric in its dot counts; on a permuted staircase it is sgn σ."""

    def __init__(self):
        super().__init__("explode_antisymmetry", "Antisymmetry of exploded thick strands", "antisymmetry under exchange of dots")

    def grid(self, max_strands: Optional[int] = None, rank: Optional[int] = None) -> List[Params]:
        tuples: List[Params] = []
        for a in range(2, min(self._budget(max_strands), 3) + 1):
            for dots in product(range(a + 1), repeat=a):
                for j in range(1, a):
                    variant = "equal" if dots[j - 1] == dots[j] else "swap"
                    tuples.append({"variant": variant, "dots": list(dots), "position": j, "color": 1})
            for perm in permutations(range(a)):
                tuples.append({"variant": "sign", "dots": [a - 1 - p for p in perm], "position": 0, "color": 1})
        return tuples

    def thin_strands(self, params: Params) -> int:
        return len(params["dots"])

    def build(self, params: Params, engine: EngineConfig) -> Sides:
        dots, i = list(params["dots"]), params["color"]
        a = len(dots)
        obj = thick_object((i, a))
        lhs = exploded(i, dots)
        if params["variant"] == "equal":
            return Sides(lhs, linear_combination([], obj, obj))
        if params["variant"] == "swap":
            j = params["position"]
            swapped = dots[:]
            swapped[j - 1], swapped[j] = swapped[j], swapped[j - 1]
            return Sides(lhs, linear_combination([(-1, exploded(i, swapped))], obj, obj))
        perm = tuple(a - 1 - d for d in dots)
        return Sides(lhs, linear_combination([(sign(perm), identity((i, a)))], obj, obj))


class SkewSplitter(IdentitySpec):
    """merge ∘ ((π_γ π_ψ) ⊗ 1_b) ∘ split = π_{γ/(K_{a,b} − ψ)} on the merged strand."""

    def __init__(self):
        super().__init__("skew_splitter", "Digons decorated on one side give skew Schur decorations", "skew splitter lemma")

    def grid(self, max_strands: Optional[int] = None, rank: Optional[int] = None) -> List[Params]:
        budget = self._budget(max_strands)
        tuples: List[Params] = []
        for a, b in product(range(1, 3), repeat=2):
            if a + b > budget:
                continue
            for gamma in enumerate_partitions(a, b + 1):
                for psi in enumerate_partitions(a, b):
                    tuples.append({"a": a, "b": b, "gamma": str(gamma), "psi": str(psi), "color": 1})
        return tuples

    def thin_strands(self, params: Params) -> int:
        return params["a"] + params["b"]

    def build(self, params: Params, engine: EngineConfig) -> Sides:
        a, b, i = params["a"], params["b"], params["color"]
        gamma, psi = parse_partition(params["gamma"]), parse_partition(params["psi"])
        decorated = compose(thick_dot(i, a, gamma), thick_dot(i, a, psi))
        lhs = compose(merge(i, a, b), tensor(decorated, identity((i, b))), split(i, a, b))
        m = a + b
        expansion = schur_expand(skew_schur(gamma, rect_complement(psi, a, b), m), m)
        obj = thick_object((i, m))
        rhs = linear_combination(
            [(coeff, thick_dot(i, m, mu)) for mu, coeff in sorted(expansion.items(), key=lambda item: item[0].sort_key())],
            obj,
            obj,
        )
        return Sides(lhs, rhs)


class DotSlide(IdentitySpec):
    """A decoration passes freely through a thick crossing of two different colours."""

    def __init__(self):
        super().__init__("dot_slide", "Thick dots slide through different-colour thick crossings", "dot slide")

    def grid(self, max_strands: Optional[int] = None, rank: Optional[int] = None) -> List[Params]:
        budget = self._budget(max_strands)
        tuples: List[Params] = []
        for kind in ("adjacent", "distant"):
            for left_color, right_color in color_pairs(kind, self._rank(rank)):
                for a, b in product(range(1, 3), repeat=2):
                    if a + b > budget:
                        continue
                    for strand, thickness in (("left", a), ("right", b)):
                        for size in (1, 2):
                            for alpha in partitions_of(size, max_parts=thickness):
                                tuples.append({
                                    "a": a, "b": b, "left": left_color, "right": right_color,
                                    "strand": strand, "alpha": str(alpha),
                                })
        return tuples

    def thin_strands(self, params: Params) -> int:
        return params["a"] + params["b"]

    def build(self, params: Params, engine: EngineConfig) -> Sides:
        a, b, i, j = params["a"], params["b"], params["left"], params["right"]
        alpha = parse_partition(params["alpha"])
        crossing = cross(i, a, j, b)
        if params["strand"] == "left":
            lhs = compose(crossing, tensor(thick_dot(i, a, alpha), identity((j, b))))
            rhs = compose(tensor(identity((j, b)), thick_dot(i, a, alpha)), crossing)
        else:
            lhs = compose(crossing, tensor(identity((i, a)), thick_dot(j, b, alpha)))
            rhs = compose(tensor(thick_dot(j, b, alpha), identity((i, a))), crossing)
        return Sides(lhs, rhs)


digon_eval = DigonEvaluation()
identity_registry.register(digon_eval)

explode_antisymmetry = ExplodeAntisymmetry()
identity_registry.register(explode_antisymmetry)

skew_splitter = SkewSplitter()
identity_registry.register(skew_splitter)

dot_slide = DotSlide()
identity_registry.register(dot_slide)
