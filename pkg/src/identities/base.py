from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Union

from src.klr.element import ThinElement
from src.thick.diagram import ThickDiagram
from src.thick.engine import EngineConfig
from src.utils.config import config

Params = Dict[str, Any]
Side = Union[ThinElement, ThickDiagram, int, Any]


@dataclass(frozen=True)
class Sides:
    """Both sides of one grid tuple.

    `kind` is "thin" (ThinElements), "thick" (ThickDiagrams) or "scalar"
    (anything compared with ==, such as Laurent polynomials or counts).
    """

    lhs: Side
    rhs: Side
    kind: str = "thick"


class IdentitySpec(ABC):
    """Base class for all registered identities."""

    def __init__(self, name: str, description: str, reference: str = ""):
        self.name = name
        self.description = description
        self.reference = reference

    @abstractmethod
    def grid(self, max_strands: Optional[int] = None, rank: Optional[int] = None) -> List[Params]:
        """The default parameter grid, every tuple within the strand budget."""
        pass

    @abstractmethod
    def build(self, params: Params, engine: EngineConfig) -> Sides:
        """Build both sides for one tuple."""
        pass

    def is_valid(self, params: Params) -> bool:
        """Validity predicate on a tuple; grids only ever contain valid ones."""
        return True

    def thin_strands(self, params: Params) -> int:
        """Number of thin strands at the bottom of the exploded sides."""
        return 0

    def audit(self, params: Params, sides: Sides) -> Optional[str]:
        """An extra structural check; returns a failure message or None."""
        return None

    def _budget(self, max_strands: Optional[int]) -> int:
        return config.max_strands if max_strands is None else max_strands

    def _rank(self, rank: Optional[int]) -> int:
        return config.rank if rank is None else rank

    def to_dict(self, max_strands: Optional[int] = None, rank: Optional[int] = None) -> Dict[str, Any]:
        return {
            "name": self.name,
            "description": self.description,
            "reference": self.reference,
            "grid_size": len(self.grid(max_strands, rank)),
        }


def color_pairs(kind: str, rank: int) -> List[tuple]:
    """Representative (left, right) colour pairs of one relation kind, both orders."""
    if kind == "same":
        return [(1, 1)]
    if kind == "adjacent":
        return [(1, 2), (2, 1)] if rank >= 3 else []
    if kind == "distant":
        return [(1, 3), (3, 1)] if rank >= 4 else []
    raise ValueError(f"unknown colour relation {kind!r}")


class IdentityRegistry:
    """Registry for managing identity specs."""

    def __init__(self):
        self.identities: Dict[str, IdentitySpec] = {}
        self.aliases: Dict[str, str] = {}

    def register(self, spec: IdentitySpec, aliases: Sequence[str] = ()):
        """Register an identity, optionally under extra names."""
        self.identities[spec.name] = spec
        for alias in aliases:
            self.aliases[alias] = spec.name

    def get_identity(self, name: str) -> Optional[IdentitySpec]:
        """Get an identity by name or alias."""
        return self.identities.get(self.aliases.get(name, name))

    def canonical_name(self, name: str) -> str:
        return self.aliases.get(name, name)

    def list_identities(self) -> List[str]:
        """List all registered identities."""
        return list(self.identities.keys())

    def require(self, name: str) -> IdentitySpec:
        spec = self.get_identity(name)
        if not spec:
            raise KeyError(f"Identity '{name}' not found")
        return spec


# Global identity registry
identity_registry = IdentityRegistry()
