"""Scalar identities of the symmetric-function layer."""

from typing import List, Optional

from src.identities.base import IdentitySpec, Params, Sides, identity_registry
from src.symfunc.partitions import conjugate, enumerate_partitions, parse_partition
from src.symfunc.quantum import quantum_binomial_partition, q_divided_power_product
from src.symfunc.schur import schur_bialternant, schur_giambelli
from src.thick.engine import EngineConfig


class QuantumBinomialSum(IdentitySpec):
    """Σ_{α∈P(a,b)} q^{2|α|−ab} = [a+b choose a]."""

    def __init__(self, limit: int = 10):
        super().__init__("qbinom_partition_sum", "Quantum binomials as sums over a rectangle", "quantum binomial")
        self.limit = limit

    def grid(self, max_strands: Optional[int] = None, rank: Optional[int] = None) -> List[Params]:
        return [{"a": a, "b": n - a} for n in range(self.limit + 1) for a in range(n + 1)]

    def build(self, params: Params, engine: EngineConfig) -> Sides:
        a, b = params["a"], params["b"]
        return Sides(quantum_binomial_partition(a, b), q_divided_power_product(a, b), "scalar")


class Giambelli(IdentitySpec):
    """det[ε_{α_i+j−i}] = π_ᾱ."""

    def __init__(self):
        super().__init__("giambelli", "Determinant formula against the bialternant", "Giambelli formula")

    def grid(self, max_strands: Optional[int] = None, rank: Optional[int] = None) -> List[Params]:
        return [{"alpha": str(alpha), "vars": m} for m in (4, 5) for alpha in enumerate_partitions(4, 4)]

    def build(self, params: Params, engine: EngineConfig) -> Sides:
        alpha, m = parse_partition(params["alpha"]), params["vars"]
        return Sides(schur_giambelli(alpha, m), schur_bialternant(conjugate(alpha), m), "scalar")


qbinom_partition_sum = QuantumBinomialSum()
identity_registry.register(qbinom_partition_sum)

giambelli = Giambelli()
identity_registry.register(giambelli)
