"""
Tests for thick generators, diagram trees, explosion and the thick oracle
"""

import pytest

from src.klr.element import compose as thin_compose
from src.klr.element import crossing, dot, identity as thin_identity, tensor as thin_tensor
from src.klr.polyrep import poly_action
from src.klr.reduction import equal, stack
from src.symfunc.partitions import EMPTY, Partition
from src.symfunc.polynomials import poly_ring
from src.thick import generators
from src.thick.calibration import calibrate_engine, engine_passes, splitters_pass
from src.thick.diagram import (
    Compose,
    ThickObject,
    compose,
    cross,
    explode,
    identity,
    linear_combination,
    merge,
    split,
    thick_dot,
    thick_object,
)
from src.thick.engine import EngineConfig, repair_candidates
from src.thick.oracle import block_probes, probe_count, thick_oracle_equal
from src.utils.errors import ThicknessMismatchError

P = Partition.of
ENGINE = EngineConfig()


class TestIdempotents:
    """Test the divided-power idempotents e_a."""

    def test_small_idempotents(self):
        """Test e1 = identity and e2 = ψ x1."""
        assert generators.idempotent(1, 1) == thin_identity((1,))
        e2 = generators.idempotent(2, 1)
        assert dict(e2.terms) == {(1, (1, 0)): 1}
        assert e2.degree == 0

    @pytest.mark.parametrize("a", [1, 2, 3, 4, 5])
    def test_idempotency(self, a):
        """Test e_a ∘ e_a = e_a."""
        e = generators.idempotent(a, 2)
        assert equal(thin_compose(e, e), e)

    def test_e2_acts_as_identity_on_constants(self):
        """Test e2 · 1 = 1 in the polynomial representation."""
        R = poly_ring(2)
        assert poly_action(generators.idempotent(2, 1), R.one)[1] == R.one

    def test_delta_order(self):
        """Test both dot patterns of e_a."""
        assert ENGINE.delta(3) == (2, 1, 0)
        assert EngineConfig(delta_order="ascending").delta(3) == (0, 1, 2)


class TestSplittersAndMerges:
    """Test trivalent vertices and the calibration that fixes their signs."""

    def test_unit_thickness(self):
        """Test merge(1,1) = ψ and split(1,1) = e2."""
        assert equal(generators.merge(1, 1, 1), crossing(1, (1, 1)))
        assert equal(generators.split(1, 1, 1), generators.idempotent(2, 1))

    def test_digons(self):
        """Test merge ∘ (x1 ⊗ 1) ∘ split = e2 and merge ∘ (1 ⊗ x2) ∘ split = −e2."""
        e2 = generators.idempotent(2, 1)
        m, s = generators.merge(1, 1, 1), generators.split(1, 1, 1)
        assert equal(stack(m, dot(1, (1, 1)), s), e2)
        assert equal(stack(m, dot(2, (1, 1)), s), -e2)

    def test_vertex_degrees(self):
        """Test thin degrees 0 for split and −2ab for merge."""
        assert generators.split(2, 1, 1).degree == 0
        assert generators.merge(2, 1, 1).degree == -4
        assert merge(1, 2, 1).degree == -4

    def test_zero_thickness_vertices(self):
        """Test that a vertex with an empty edge is an identity."""
        assert split(1, 0, 2) == identity((1, 2))
        assert equal(generators.merge(0, 2, 1), generators.idempotent(2, 1))

    def test_default_engine_calibrates(self):
        """Test that the default configuration passes and is kept."""
        assert engine_passes(ENGINE)
        assert calibrate_engine(ENGINE) == ENGINE

    def test_wrong_signs_are_repaired(self):
        """Test that a bad merge sign fails and calibration repairs it."""
        flipped = EngineConfig(merge_sign=-1)
        assert not splitters_pass(flipped)
        assert calibrate_engine(flipped).merge_sign * calibrate_engine(flipped).split_sign == 1

    def test_repair_candidates_start_with_preferred(self):
        """Test the order of the repair set."""
        preferred = EngineConfig(split_sign=-1)
        candidates = repair_candidates(preferred)
        assert candidates[0] == preferred
        assert len(candidates) == len(set(candidates)) == 16


class TestDecorations:
    """Test Schur-decorated thick strands."""

    def test_undecorated_strand(self):
        """Test π_∅ gives e_a."""
        assert equal(generators.thick_dot(3, EMPTY, 1), generators.idempotent(3, 1))

    def test_thin_strand_decoration(self):
        """Test that π_(d) on a thin strand is d dots."""
        assert equal(generators.thick_dot(1, P(3), 1), dot(1, (1,), power=3))

    def test_first_schur_on_double_strand(self):
        """Test that π_(1) on a thickness-2 strand multiplies by x1 + x2."""
        e2 = generators.idempotent(2, 1)
        expected = thin_compose(dot(1, (1, 1)) + dot(2, (1, 1)), e2)
        assert equal(generators.thick_dot(2, P(1), 1), expected)

    def test_decoration_outside_strand_is_zero(self):
        """Test π_α with more parts than the thickness."""
        assert generators.thick_dot(1, P(1, 1), 1).is_zero()
        assert explode(thick_dot(2, 2, P(1, 1, 1))).is_zero()

    def test_schur_on_strand(self):
        """Test products of decorations against LR sums."""
        td = generators.thick_dot(2, P(1), 1)
        assert equal(stack(td, td), generators.schur_on_strand(2, P(1), P(1), 1))
        assert equal(generators.schur_on_strand(2, P(2, 1), EMPTY, 1), generators.thick_dot(2, P(2, 1), 1))
        assert equal(generators.schur_on_strand(1, P(2), P(3), 1), dot(1, (1,), power=5))

    def test_exploded_antisymmetry(self):
        """Test that swapping two exploded dot exponents flips the sign."""
        left = generators.exploded(1, (2, 0))
        right = generators.exploded(1, (0, 2))
        assert equal(left, -right)
        assert generators.exploded(1, (1, 1)).is_zero()


class TestThickCrossings:
    """Test thick crossings of equal and different colours."""

    def test_same_colour_unit_crossing(self):
        """Test that the a=b=1 sandwich is the thin crossing."""
        assert equal(generators.thick_cross(1, 1, 1, 1), crossing(1, (1, 1)))

    def test_distant_unit_crossing_squares_to_identity(self):
        """Test thin distant crossings."""
        forward = generators.thick_cross(1, 1, 3, 1)
        back = generators.thick_cross(3, 1, 1, 1)
        assert equal(forward, crossing(1, (1, 3)))
        assert equal(thin_compose(back, forward), thin_identity((1, 3)))

    def test_distant_thick_crossing_squares_to_identity(self):
        """Test thickness (1,2) with distant colours."""
        forward = generators.thick_cross(1, 1, 3, 2)
        back = generators.thick_cross(3, 2, 1, 1)
        expected = thin_tensor(thin_identity((1,)), generators.idempotent(2, 3))
        assert equal(thin_compose(back, forward), expected)

    def test_crossing_degree(self):
        """Test diagram degrees of thick crossings."""
        assert cross(1, 2, 2, 1).degree == 2
        assert cross(1, 2, 3, 2).degree == 0
        assert cross(1, 1, 1, 2).degree == -4


class TestDiagrams:
    """Test composition trees and explosion."""

    def test_objects(self):
        """Test thin colours, erasure of empty strands and rejection of bad thicknesses."""
        obj = thick_object((1, 2), (2, 0), (3, 1))
        assert obj.strands == ((1, 2), (3, 1))
        assert obj.thin_colors == (1, 1, 3)
        assert str(obj) == "E1^(2) E3^(1)"
        with pytest.raises(ThicknessMismatchError):
            ThickObject(((1, 0),))

    def test_shift_is_ignored_by_equality(self):
        """Test that grading shifts do not affect object equality."""
        assert thick_object((1, 2), shift=-4) == thick_object((1, 2))

    def test_compose_checks_boundaries(self):
        """Test that stacking incompatible thicknesses raises."""
        with pytest.raises(ThicknessMismatchError):
            Compose(merge(1, 1, 1), identity((1, 1)))

    def test_identity_explodes_to_idempotents(self):
        """Test explode(Id)."""
        assert explode(identity((2, 1))) == thin_identity((2,))
        assert equal(explode(identity((1, 2), (2, 1))), thin_tensor(generators.idempotent(2, 1), thin_identity((2,))))

    def test_dotless_digon_vanishes(self):
        """Test explode(merge ∘ split) = 0 at a=b=1."""
        assert explode(compose(merge(1, 1, 1), split(1, 1, 1))).is_zero()

    def test_explode_is_associative(self):
        """Test that re-bracketing a composite does not change its explosion."""
        top, middle, bottom = merge(1, 1, 1), thick_dot(1, 1, P(1)) | identity((1, 1)), split(1, 1, 1)
        assert equal(explode(Compose(top, Compose(middle, bottom))), explode(Compose(Compose(top, middle), bottom)))

    def test_sum_of_diagrams(self):
        """Test explosion of linear combinations and their boundary check."""
        source = thick_object((1, 2))
        total = linear_combination([(2, thick_dot(1, 2, P(1))), (-1, thick_dot(1, 2, P(1)))], source, source)
        assert equal(explode(total), generators.thick_dot(2, P(1), 1))
        with pytest.raises(ThicknessMismatchError):
            linear_combination([(1, identity((1, 1)))], source, source)

    def test_explode_rejects_unknown_nodes(self):
        """Test that only known node types explode."""
        with pytest.raises(TypeError):
            explode(object())


class TestThickOracle:
    """Test the polynomial-representation oracle for thick diagrams."""

    def test_probe_counts(self):
        """Test the size of the block-symmetric probe basis."""
        obj = thick_object((1, 2), (1, 1))
        assert probe_count(obj) == 3
        assert len(list(block_probes(obj))) == 3
        assert probe_count(thick_object((1, 2), (2, 1))) == 1

    def test_digon_against_zero(self):
        """Test that the dotless digon acts by zero."""
        source = thick_object((1, 2))
        digon = compose(merge(1, 1, 1), split(1, 1, 1))
        assert thick_oracle_equal(digon, linear_combination([], source, source), ENGINE)

    def test_decorations_are_distinguished(self):
        """Test that different decorations act differently."""
        assert not thick_oracle_equal(thick_dot(1, 2, P(1)), thick_dot(1, 2, P(2)), ENGINE)
