"""Splitter identities: associativity, pitchfork, opening a thick edge, and unfolding e_{a+1}."""

from typing import List, Optional

from src.identities.base import IdentitySpec, Params, Sides, color_pairs, identity_registry
from src.symfunc.partitions import Partition
from src.thick.diagram import at, compose, cross, identity, merge, split, tensor, thick_dot
from src.thick.engine import EngineConfig


class SplitterAssociativity(IdentitySpec):
    """Splitting (or merging) a+b+c three ways does not depend on the bracketing."""

    def __init__(self):
        super().__init__("splitter_associativity", "Associativity of splitters and merges", "associativity of splitters")

    def grid(self, max_strands: Optional[int] = None, rank: Optional[int] = None) -> List[Params]:
        total = min(self._budget(max_strands), 5)
        return [
            {"a": a, "b": b, "c": c, "color": 1, "kind": kind}
            for kind in ("split", "merge")
            for a in range(1, total + 1)
            for b in range(1, total + 1)
            for c in range(1, total + 1)
            if a + b + c <= total
        ]

    def thin_strands(self, params: Params) -> int:
        return params["a"] + params["b"] + params["c"]

    def build(self, params: Params, engine: EngineConfig) -> Sides:
        a, b, c, i = params["a"], params["b"], params["c"], params["color"]
        left_first = compose(at(split(i, a, b), right=[(i, c)]), split(i, a + b, c))
        right_first = compose(at(split(i, b, c), left=[(i, a)]), split(i, a, b + c))
        if params["kind"] == "merge":
            left_first = compose(merge(i, a + b, c), at(merge(i, a, b), right=[(i, c)]))
            right_first = compose(merge(i, a, b + c), at(merge(i, b, c), left=[(i, a)]))
        return Sides(left_first, right_first)


class Pitchfork(IdentitySpec):
    """A splitter or merge slides through a thick crossing with a strand of any colour.

    side "left": the forked strand starts on the left; side "right": on the right.
    """

    def __init__(self):
        super().__init__("pitchfork", "Splitters slide through thick crossings", "pitchfork lemma")

    def grid(self, max_strands: Optional[int] = None, rank: Optional[int] = None) -> List[Params]:
        budget = self._budget(max_strands)
        tuples = []
        for kind in ("same", "adjacent", "distant"):
            for fork, other in color_pairs(kind, self._rank(rank)):
                for a in range(1, 3):
                    for b in range(1, 4 - a):
                        for c in range(1, 3):
                            if a + b + c > budget:
                                continue
                            for vertex in ("split", "merge"):
                                for side in ("left", "right"):
                                    tuples.append({
                                        "a": a, "b": b, "c": c, "fork": fork, "other": other,
                                        "vertex": vertex, "side": side,
                                    })
        return tuples

    def thin_strands(self, params: Params) -> int:
        return params["a"] + params["b"] + params["c"]

    def build(self, params: Params, engine: EngineConfig) -> Sides:
        a, b, c = params["a"], params["b"], params["c"]
        i, j = params["fork"], params["other"]
        if params["side"] == "left":
            if params["vertex"] == "split":
                lhs = compose(at(split(i, a, b), left=[(j, c)]), cross(i, a + b, j, c))
                rhs = compose(
                    at(cross(i, a, j, c), right=[(i, b)]),
                    at(cross(i, b, j, c), left=[(i, a)]),
                    at(split(i, a, b), right=[(j, c)]),
                )
            else:
                lhs = compose(cross(i, a + b, j, c), at(merge(i, a, b), right=[(j, c)]))
                rhs = compose(
                    at(merge(i, a, b), left=[(j, c)]),
                    at(cross(i, a, j, c), right=[(i, b)]),
                    at(cross(i, b, j, c), left=[(i, a)]),
                )
        else:
            if params["vertex"] == "split":
                lhs = compose(at(split(i, a, b), right=[(j, c)]), cross(j, c, i, a + b))
                rhs = compose(
                    at(cross(j, c, i, b), left=[(i, a)]),
                    at(cross(j, c, i, a), right=[(i, b)]),
                    at(split(i, a, b), left=[(j, c)]),
                )
            else:
                lhs = compose(cross(j, c, i, a + b), at(merge(i, a, b), left=[(j, c)]))
                rhs = compose(
                    at(merge(i, a, b), right=[(j, c)]),
                    at(cross(j, c, i, b), left=[(i, a)]),
                    at(cross(j, c, i, a), right=[(i, b)]),
                )
        return Sides(lhs, rhs)


class OpeningThickEdge(IdentitySpec):
    """split_{b+x,a} ∘ merge_{a+x,b} = (merge_{x,b} ⊗ 1_a) ∘ (1_x ⊗ X_{a,b}) ∘ (split_{x,a} ⊗ 1_b)."""

    def __init__(self):
        super().__init__("opening_thick_edge", "A thick edge opens into a crossing", "opening of a thick edge")

    def grid(self, max_strands: Optional[int] = None, rank: Optional[int] = None) -> List[Params]:
        total = min(self._budget(max_strands), 4)
        return [
            {"a": a, "b": b, "x": x, "color": 1}
            for a in range(1, total + 1)
            for b in range(1, total + 1)
            for x in range(1, total + 1)
            if a + b + x <= total
        ]

    def thin_strands(self, params: Params) -> int:
        return params["a"] + params["b"] + params["x"]

    def build(self, params: Params, engine: EngineConfig) -> Sides:
        a, b, x, i = params["a"], params["b"], params["x"], params["color"]
        lhs = compose(split(i, b + x, a), merge(i, a + x, b))
        rhs = compose(
            at(merge(i, x, b), right=[(i, a)]),
            at(cross(i, a, i, b), left=[(i, x)]),
            at(split(i, x, a), right=[(i, b)]),
        )
        return Sides(lhs, rhs)


class UnfoldIdempotent(IdentitySpec):
    """e_{a+1} = merge_{1,a} ∘ (x^a ⊗ 1_a) ∘ split_{1,a}."""

    def __init__(self):
        super().__init__("unfold_idempotent", "A thickness-(a+1) strand unfolded as (1, a)", "unfolding of e_{a+1}")

    def grid(self, max_strands: Optional[int] = None, rank: Optional[int] = None) -> List[Params]:
        return [{"a": a, "color": 1} for a in range(1, min(self._budget(max_strands), 5))]

    def thin_strands(self, params: Params) -> int:
        return params["a"] + 1

    def build(self, params: Params, engine: EngineConfig) -> Sides:
        a, i = params["a"], params["color"]
        lhs = identity((i, a + 1))
        rhs = compose(merge(i, 1, a), tensor(thick_dot(i, 1, Partition.of(a)), identity((i, a))), split(i, 1, a))
        return Sides(lhs, rhs)


splitter_associativity = SplitterAssociativity()
identity_registry.register(splitter_associativity)

pitchfork = Pitchfork()
identity_registry.register(pitchfork)

opening_thick_edge = OpeningThickEdge()
identity_registry.register(opening_thick_edge)

unfold_idempotent = UnfoldIdempotent()
identity_registry.register(unfold_idempotent, aliases=("pomoc11",))
