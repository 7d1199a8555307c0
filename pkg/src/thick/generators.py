"""Thick generators compiled to reduced thin elements.

e_a        psi_{w0} x^δ on a strands of one colour
split      (e_a ⊗ e_b) ∘ e_{a+b}
merge      e_{a+b} ∘ Ψ_{a,b} ∘ (e_a ⊗ e_b), Ψ_{a,b} moving the a-block to the right
thick dot  e_a ∘ psi_{w0} x^{α+δ} ∘ e_a, acting as multiplication by π_α
"""

import logging
from functools import lru_cache
from typing import Callable, List, Sequence

from src.klr.element import ThinElement, identity, permutation_element, tensor, zero
from src.klr.permutations import block_transposition, longest_perm
from src.klr.reduction import stack
from src.klr.serialize import format_element, parse_element
from src.storage.cache_manager import SplitterCacheManager, get_cache_manager
from src.symfunc.littlewood import lr_coeff
from src.symfunc.partitions import Partition, partitions_of
from src.thick.engine import EngineConfig
from src.utils.errors import PartitionError

logger = logging.getLogger(__name__)

DEFAULT_ENGINE = EngineConfig()


def _through_cache(
    kind: str, colors: List[int], thicknesses: List[int], engine: EngineConfig, build: Callable[[], ThinElement]
) -> ThinElement:
    cache = get_cache_manager()
    key = SplitterCacheManager.make_key(kind, colors, thicknesses, engine.label())
    entry = cache.get(key)
    if entry is not None:
        parsed = parse_element(entry["text"]) if entry["text"] != "0" else zero(entry["bottom"], entry["top"])
        return ThinElement(entry["bottom"], dict(parsed.terms), entry["top"], reduced=True)
    element = build()
    cache.put(key, element.bottom, element.top, format_element(element))
    return element


@lru_cache(maxsize=None)
def idempotent(a: int, color: int, engine: EngineConfig = DEFAULT_ENGINE) -> ThinElement:
    """e_a on a strands of `color`; the empty identity for a = 0."""
    if a < 0:
        raise PartitionError(f"thickness must be nonnegative, got {a}")
    if a == 0:
        return identity(())
    return permutation_element(longest_perm(a), (color,) * a, engine.delta(a))


@lru_cache(maxsize=None)
def split(a: int, b: int, color: int, engine: EngineConfig = DEFAULT_ENGINE) -> ThinElement:
    """a+b → (a, b)."""
    if a == 0 or b == 0:
        return idempotent(a + b, color, engine)

    def build() -> ThinElement:
        body = stack(tensor(idempotent(a, color, engine), idempotent(b, color, engine)), idempotent(a + b, color, engine))
        return body.scale(engine.split_sign)

    return _through_cache("split", [color], [a, b], engine, build)


@lru_cache(maxsize=None)
def merge(a: int, b: int, color: int, engine: EngineConfig = DEFAULT_ENGINE) -> ThinElement:
    """(a, b) → a+b."""
    if a == 0 or b == 0:
        return idempotent(a + b, color, engine)

    def build() -> ThinElement:
        colors = (color,) * (a + b)
        body = stack(
            idempotent(a + b, color, engine),
            permutation_element(block_transposition(a, b), colors),
            tensor(idempotent(a, color, engine), idempotent(b, color, engine)),
        )
        return body.scale(engine.merge_sign)

    return _through_cache("merge", [color], [a, b], engine, build)


@lru_cache(maxsize=None)
def exploded(color: int, dots: Sequence[int], engine: EngineConfig = DEFAULT_ENGINE) -> ThinElement:
    """e_a ∘ psi_{w0} x^dots ∘ e_a for a = len(dots), antisymmetric in the entries of `dots`."""
    dots = tuple(dots)
    a = len(dots)
    if a == 0:
        return identity(())
    e = idempotent(a, color, engine)
    return stack(e, permutation_element(longest_perm(a), (color,) * a, dots), e)


@lru_cache(maxsize=None)
def thick_dot(a: int, alpha: Partition, color: int, engine: EngineConfig = DEFAULT_ENGINE) -> ThinElement:
    """A thickness-a strand decorated by π_α; zero when α has more than a parts."""
    if alpha.length > a:
        return zero((color,) * a)
    if a == 0:
        return identity(())
    delta = engine.delta(a)
    return exploded(color, tuple(alpha.part(j) + delta[j - 1] for j in range(1, a + 1)), engine)


@lru_cache(maxsize=None)
def thick_cross(color_left: int, a: int, color_right: int, b: int, engine: EngineConfig = DEFAULT_ENGINE) -> ThinElement:
    """Bottom (color_left^a, color_right^b) to top (color_right^b, color_left^a)."""
    if a == 0:
        return idempotent(b, color_right, engine)
    if b == 0:
        return idempotent(a, color_left, engine)

    if color_left == color_right:
        def build() -> ThinElement:
            return stack(split(b, a, color_left, engine), merge(a, b, color_left, engine))
    else:
        def build() -> ThinElement:
            left = idempotent(a, color_left, engine)
            right = idempotent(b, color_right, engine)
            colors = (color_left,) * a + (color_right,) * b
            return stack(tensor(right, left), permutation_element(block_transposition(a, b), colors), tensor(left, right))

    return _through_cache("cross", [color_left, color_right], [a, b], engine, build)


def schur_on_strand(a: int, alpha: Partition, beta: Partition, color: int, engine: EngineConfig = DEFAULT_ENGINE) -> ThinElement:
    """Σ_γ c^γ_{α,β} · (strand decorated by π_γ), the product of two decorations."""
    result = zero((color,) * a)
    for gamma in partitions_of(alpha.size + beta.size, max_parts=a):
        coeff = lr_coeff(alpha, beta, gamma)
        if coeff:
            result = result + thick_dot(a, gamma, color, engine).scale(coeff)
    return result


def clear_caches():
    for cached in (idempotent, split, merge, exploded, thick_dot, thick_cross):
        cached.cache_clear()
    logger.debug("cleared thick generator caches")
