"""Identities of the thin calculus: the local relations, dot migration, and the oracle sweep."""

from itertools import product
from typing import List, Optional

import numpy as np

from src.identities.base import IdentitySpec, Params, Sides, identity_registry
from src.klr.element import ThinElement
from src.klr.polyrep import oracle_equal
from src.klr.reduction import equal
from src.klr.relations import random_pair, relation_instances
from src.thick.engine import EngineConfig
from src.utils.config import config


class ThinRelations(IdentitySpec):
    """Every local relation, placed at every position of every colouring."""

    def __init__(self):
        super().__init__(
            "thin_relations",
            "Local relations of the thin calculus in every context",
            "quadratic, dot-slide and braid relations",
        )

    def grid(self, max_strands: Optional[int] = None, rank: Optional[int] = None) -> List[Params]:
        strands_cap = min(self._budget(max_strands), 5)
        tuples = []
        for strands in range(2, strands_cap + 1):
            for colors in product(range(1, self._rank(rank)), repeat=strands):
                for k in range(1, strands):
                    for instance in relation_instances(colors, k):
                        tuples.append({"colors": list(colors), "k": k, "relation": instance.name})
        return tuples

    def thin_strands(self, params: Params) -> int:
        return len(params["colors"])

    def build(self, params: Params, engine: EngineConfig) -> Sides:
        for instance in relation_instances(params["colors"], params["k"]):
            if instance.name == params["relation"]:
                return Sides(instance.lhs, instance.rhs, "thin")
        raise KeyError(f"no relation {params['relation']!r} at position {params['k']} of {params['colors']}")


class DotMigration(IdentitySpec):
    """x_1^d ψ − ψ x_2^d = Σ_{r+s=d−1} x_1^r x_2^s, and its mirror."""

    def __init__(self):
        super().__init__("dot_migration", "Moving d dots through a same-colour crossing", "dot migration")

    def grid(self, max_strands: Optional[int] = None, rank: Optional[int] = None) -> List[Params]:
        if self._budget(max_strands) < 2:
            return []
        return [{"d": d, "color": 1, "side": side} for d in range(1, 6) for side in ("left", "right")]

    def thin_strands(self, params: Params) -> int:
        return 2

    def build(self, params: Params, engine: EngineConfig) -> Sides:
        d, color = params["d"], params["color"]
        colors = (color, color)
        if params["side"] == "left":
            lhs = ThinElement(colors, {((d, 0), 1): 1, (1, (0, d)): -1})
        else:
            lhs = ThinElement(colors, {(1, (d, 0)): 1, ((0, d), 1): -1})
        rhs = ThinElement(colors, {((r, d - 1 - r),): 1 for r in range(d)})
        return Sides(lhs, rhs, "thin")

    def audit(self, params: Params, sides: Sides) -> Optional[str]:
        if len(sides.rhs) != params["d"]:
            return f"right side has {len(sides.rhs)} terms, expected {params['d']}"
        return None


class OracleAgreement(IdentitySpec):
    """Seeded random pairs: canonical-form equality agrees with the polynomial action."""

    def __init__(self, pairs: int = 1000, max_generators: int = 6):
        super().__init__("oracle_agreement", "equal() agrees with oracle_equal() on random pairs", "polynomial representation")
        self.pairs = pairs
        self.max_generators = max_generators

    def grid(self, max_strands: Optional[int] = None, rank: Optional[int] = None) -> List[Params]:
        strands = min(self._budget(max_strands), 5)
        return [
            {"index": i, "seed": config.seed, "rank": self._rank(rank), "max_strands": strands}
            for i in range(self.pairs)
        ]

    def thin_strands(self, params: Params) -> int:
        return params["max_strands"]

    def build(self, params: Params, engine: EngineConfig) -> Sides:
        rng = np.random.default_rng([params["seed"], params["index"]])
        first, second = random_pair(rng, params["rank"], params["max_strands"], self.max_generators)
        return Sides(equal(first, second), oracle_equal(first, second, engine.orientation), "scalar")


thin_relations = ThinRelations()
identity_registry.register(thin_relations)

dot_migration = DotMigration()
identity_registry.register(dot_migration)

oracle_agreement = OracleAgreement()
identity_registry.register(oracle_agreement)
