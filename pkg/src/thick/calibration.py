"""Pick the first engine configuration in the repair set that the basic checks accept."""

import logging
from typing import Iterable, Optional

from src.klr.element import compose, dot, identity, tensor
from src.klr.polyrep import oracle_equal
from src.klr.reduction import equal
from src.klr.relations import relation_instances
from src.thick.engine import EngineConfig, repair_candidates
from src.thick.generators import idempotent, merge, split

logger = logging.getLogger(__name__)

_PROBE_COLORS = ((1, 2, 1), (2, 1, 2), (1, 1, 2), (2, 1, 1), (1, 3, 1))


def orientation_passes(engine: EngineConfig) -> bool:
    """The local relations hold in the polynomial representation for this orientation."""
    for colors in _PROBE_COLORS:
        for k in (1, 2):
            for instance in relation_instances(colors, k):
                if not oracle_equal(instance.lhs, instance.rhs, engine.orientation):
                    return False
    return True


def splitters_pass(engine: EngineConfig) -> bool:
    """e_a is idempotent for a ≤ 3 and the a=b=1 digons evaluate to ±e_2."""
    for a in (1, 2, 3):
        e = idempotent(a, 1, engine)
        if not equal(compose(e, e), e):
            return False
    e2 = idempotent(2, 1, engine)
    strand = identity((1,))
    x = dot(1, (1,))
    left = compose(merge(1, 1, 1, engine), compose(tensor(x, strand), split(1, 1, 1, engine)))
    right = compose(merge(1, 1, 1, engine), compose(tensor(strand, x), split(1, 1, 1, engine)))
    return equal(left, e2) and equal(right, -e2)


def engine_passes(engine: EngineConfig) -> bool:
    return orientation_passes(engine) and splitters_pass(engine)


def calibrate_engine(
    preferred: Optional[EngineConfig] = None, candidates: Optional[Iterable[EngineConfig]] = None
) -> EngineConfig:
    """Freeze the first passing configuration, preferring `preferred`."""
    preferred = preferred or EngineConfig()
    for candidate in candidates or repair_candidates(preferred):
        if engine_passes(candidate):
            if candidate != preferred:
                logger.warning("Recalibrated engine from %s to %s", preferred.label(), candidate.label())
            else:
                logger.info("Engine configuration %s passes calibration", candidate.label())
            return candidate
        logger.debug("Engine configuration %s rejected", candidate.label())
    raise RuntimeError("no engine configuration in the repair set passes calibration")
