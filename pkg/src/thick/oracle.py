"""Polynomial-representation oracle for thick diagrams.

Generators are kept as raw (unreduced) thin words and applied to polynomials
layer by layer, so nothing here goes through reduce(). Every exploded diagram
starts with idempotents at its bottom, which project onto polynomials symmetric
within each thick strand; those form a free module over the polynomials
symmetric within each colour, with basis Π_k π_{α_k}(block k), α_k fitting in a
thickness(k) x (thickness of the later blocks of that colour) rectangle. Both
sides are linear over the colour-symmetric polynomials, so probing that basis
decides equality.
"""

from functools import lru_cache
from itertools import product
from typing import Iterator, List, Tuple

from src.klr.element import ThinElement, compose as thin_compose, identity as thin_identity, permutation_element
from src.klr.element import tensor as thin_tensor
from src.klr.permutations import block_transposition, longest_perm
from src.klr.polyrep import poly_action
from src.symfunc.partitions import enumerate_partitions
from src.symfunc.polynomials import ExactPoly, embed, poly_ring
from src.symfunc.schur import schur_bialternant
from src.thick.diagram import (
    Compose,
    Exploded,
    Identity,
    Merge,
    Split,
    Sum,
    Tensor,
    ThickCross,
    ThickDiagram,
    ThickDot,
    ThickObject,
)
from src.thick.engine import EngineConfig
from src.utils.errors import BoundaryMismatchError


def _raw_idempotent(a: int, color: int, engine: EngineConfig) -> ThinElement:
    return permutation_element(longest_perm(a), (color,) * a, engine.delta(a))


def _raw_stack(*elements: ThinElement) -> ThinElement:
    result = elements[-1]
    for element in reversed(elements[:-1]):
        result = thin_compose(element, result)
    return result


@lru_cache(maxsize=None)
def raw_generator(diagram: ThickDiagram, engine: EngineConfig) -> ThinElement:
    """The defining thin word of a leaf, without any reduction."""
    if isinstance(diagram, Identity):
        result = thin_identity(())
        for color, a in diagram.obj.strands:
            result = thin_tensor(result, _raw_idempotent(a, color, engine))
        return result
    if isinstance(diagram, Split):
        c, a, b = diagram.color, diagram.a, diagram.b
        body = _raw_stack(
            thin_tensor(_raw_idempotent(a, c, engine), _raw_idempotent(b, c, engine)),
            _raw_idempotent(a + b, c, engine),
        )
        return body.scale(engine.split_sign)
    if isinstance(diagram, Merge):
        c, a, b = diagram.color, diagram.a, diagram.b
        body = _raw_stack(
            _raw_idempotent(a + b, c, engine),
            permutation_element(block_transposition(a, b), (c,) * (a + b)),
            thin_tensor(_raw_idempotent(a, c, engine), _raw_idempotent(b, c, engine)),
        )
        return body.scale(engine.merge_sign)
    if isinstance(diagram, (ThickDot, Exploded)):
        if isinstance(diagram, ThickDot):
            a = diagram.a
            if diagram.alpha.length > a:
                return ThinElement((diagram.color,) * a, {})
            delta = engine.delta(a)
            dots = tuple(diagram.alpha.part(j) + delta[j - 1] for j in range(1, a + 1))
        else:
            dots = diagram.dots
            a = len(dots)
        e = _raw_idempotent(a, diagram.color, engine)
        return _raw_stack(e, permutation_element(longest_perm(a), (diagram.color,) * a, dots), e)
    if isinstance(diagram, ThickCross):
        cl, a, cr, b = diagram.color_left, diagram.a, diagram.color_right, diagram.b
        if cl == cr:
            return _raw_stack(raw_generator(Split(cl, b, a), engine), raw_generator(Merge(cl, a, b), engine))
        left, right = _raw_idempotent(a, cl, engine), _raw_idempotent(b, cr, engine)
        colors = (cl,) * a + (cr,) * b
        return _raw_stack(thin_tensor(right, left), permutation_element(block_transposition(a, b), colors), thin_tensor(left, right))
    if isinstance(diagram, Tensor):
        return thin_tensor(raw_generator(diagram.left, engine), raw_generator(diagram.right, engine))
    if isinstance(diagram, Compose):
        return thin_compose(raw_generator(diagram.upper, engine), raw_generator(diagram.lower, engine))
    raise TypeError(f"no raw form for {type(diagram).__name__}")


def oracle_action(diagram: ThickDiagram, f: ExactPoly, engine: EngineConfig) -> ExactPoly:
    """diagram · f, applying compositions one layer at a time."""
    if isinstance(diagram, Compose):
        return oracle_action(diagram.upper, oracle_action(diagram.lower, f, engine), engine)
    if isinstance(diagram, Sum):
        total = f.ring.zero
        for coeff, term in diagram.terms:
            total += oracle_action(term, f, engine) * coeff
        return total
    if isinstance(diagram, Tensor) and _contains_sum(diagram):
        raise TypeError("sums inside tensor products are not supported by the oracle")
    return poly_action(raw_generator(diagram, engine), f, engine.orientation)[1]


def _contains_sum(diagram: ThickDiagram) -> bool:
    if isinstance(diagram, Sum):
        return True
    if isinstance(diagram, Tensor):
        return _contains_sum(diagram.left) or _contains_sum(diagram.right)
    if isinstance(diagram, Compose):
        return _contains_sum(diagram.upper) or _contains_sum(diagram.lower)
    return False


def block_probes(obj: ThickObject) -> Iterator[ExactPoly]:
    """Π_k π_{α_k}(variables of strand k) over the free basis described above."""
    strands = obj.strands
    width = max(sum(a for _, a in strands), 1)
    R = poly_ring(width)
    offsets: List[int] = []
    position = 0
    for _, a in strands:
        offsets.append(position)
        position += a

    choices: List[Tuple[ExactPoly, ...]] = []
    for index, (color, a) in enumerate(strands):
        later = sum(b for c, b in strands[index + 1:] if c == color)
        choices.append(tuple(embed(schur_bialternant(alpha, a), width, offsets[index])
                             for alpha in enumerate_partitions(a, later)))
    if not choices:
        yield R.one
        return
    for factors in product(*choices):
        probe = R.one
        for factor in factors:
            probe *= factor
        yield probe


def thick_oracle_equal(lhs: ThickDiagram, rhs: ThickDiagram, engine: EngineConfig) -> bool:
    if lhs.source != rhs.source or lhs.target != rhs.target:
        raise BoundaryMismatchError(f"cannot compare {lhs.source}->{lhs.target} with {rhs.source}->{rhs.target}")
    for probe in block_probes(lhs.source):
        if oracle_action(lhs, probe, engine) != oracle_action(rhs, probe, engine):
            return False
    return True


def probe_count(obj: ThickObject) -> int:
    """Size of the probe basis: a product of binomial coefficients."""
    total = 1
    for index, (color, a) in enumerate(obj.strands):
        later = sum(b for c, b in obj.strands[index + 1:] if c == color)
        total *= len(enumerate_partitions(a, later))
    return total
