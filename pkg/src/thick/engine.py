"""Orientation and sign choices left open by the thin and thick layers."""

from itertools import product
from typing import List, Literal

from pydantic import BaseModel, ConfigDict


class EngineConfig(BaseModel):
    """The choices the thin and thick layers leave open.

    orientation: which adjacent-colour crossing carries (x_k + x_{k+1}) in the oracle.
    merge_sign, split_sign: global signs of the trivalent vertices.
    delta_order: dot pattern (a−1, …, 0) or its reverse inside the idempotent e_a.
    """

    model_config = ConfigDict(frozen=True)

    orientation: Literal["ascending", "descending"] = "ascending"
    merge_sign: Literal[1, -1] = 1
    split_sign: Literal[1, -1] = 1
    delta_order: Literal["descending", "ascending"] = "descending"

    def delta(self, a: int) -> tuple:
        """δ_a for thickness a."""
        pattern = tuple(range(a - 1, -1, -1))
        return pattern if self.delta_order == "descending" else pattern[::-1]

    def label(self) -> str:
        return f"{self.orientation}/{self.merge_sign:+d}/{self.split_sign:+d}/{self.delta_order}"


def repair_candidates(preferred: EngineConfig) -> List[EngineConfig]:
    """The preferred configuration, then every allowed repair of it, then the flipped orientation."""
    seen = [preferred]
    for orientation in (preferred.orientation, "descending" if preferred.orientation == "ascending" else "ascending"):
        for merge_sign, split_sign, delta_order in product((1, -1), (1, -1), ("descending", "ascending")):
            candidate = EngineConfig(
                orientation=orientation, merge_sign=merge_sign, split_sign=split_sign, delta_order=delta_order
            )
            if candidate not in seen:
                seen.append(candidate)
    return seen

