"""
Tests for thin diagrams: degrees, stacking, reduction, the polynomial representation and the text form
"""

import numpy as np
import pytest

from src.klr.cartan import CartanSln
from src.klr.element import (
    ThinElement,
    compose,
    crossing,
    dot,
    identity,
    permutation_element,
    tensor,
    zero,
)
from src.klr.permutations import canonical_word, is_reduced, length, longest_perm, perm_of_word
from src.klr.polyrep import oracle_equal, poly_action, probe_monomials
from src.klr.reduction import equal, reduce
from src.klr.relations import all_relation_instances, random_pair, relation_instances
from src.klr.serialize import format_element, parse_element
from src.symfunc.polynomials import poly_ring
from src.utils.errors import BoundaryMismatchError, DegreeMismatchError, ParseError


def word(colors, *factors, coeff=1):
    return ThinElement(colors, {tuple(factors): coeff})


class TestDegrees:
    """Test the grading of generators."""

    def test_cartan_data(self):
        """Test the sl(4) pairing and colour checks."""
        cartan = CartanSln(4)
        assert cartan.colors == (1, 2, 3)
        assert [cartan.pairing(1, j) for j in (1, 2, 3)] == [2, -1, 0]
        with pytest.raises(BoundaryMismatchError):
            cartan.check_colors((1, 4))
        with pytest.raises(ValueError):
            CartanSln(1)

    def test_generator_degrees(self):
        """Test dot 2, same crossing −2, adjacent 1 and distant 0."""
        assert dot(1, (1,)).degree == 2
        assert crossing(1, (2, 2)).degree == -2
        assert crossing(1, (1, 2)).degree == 1
        assert crossing(1, (1, 3)).degree == 0

    def test_mixed_degrees_are_rejected(self):
        """Test that a sum of terms of different degrees cannot be built."""
        with pytest.raises(DegreeMismatchError):
            ThinElement((1, 1), {((1, 0),): 1, (): 1})

    def test_compose_adds_degrees(self):
        """Test that stacking adds degrees."""
        stacked = compose(dot(1, (1, 2)), crossing(1, (2, 1)))
        assert stacked.degree == 3


class TestStacking:
    """Test vertical and horizontal composition."""

    def test_compose_with_identity(self):
        """Test id ∘ f = f = f ∘ id."""
        f = crossing(1, (1, 2))
        assert equal(compose(identity((2, 1)), f), f)
        assert equal(compose(f, identity((1, 2))), f)

    def test_compose_dots(self):
        """Test that two dots on one strand merge into x1²."""
        stacked = reduce(compose(dot(1, (1,)), dot(1, (1,))))
        assert dict(stacked.terms) == {((2,),): 1}

    def test_compose_boundary_mismatch(self):
        """Test that stacking along different colour sequences raises."""
        with pytest.raises(BoundaryMismatchError):
            compose(identity((1, 2)), identity((2, 1)))

    def test_tensor(self):
        """Test juxtaposition of identities, dots and sums."""
        assert tensor(identity((1,)), identity((2,))) == identity((1, 2))
        assert tensor(dot(1, (1,)), identity((2,))) == dot(1, (1, 2))
        f, g, h = dot(1, (1, 1)), dot(2, (1, 1)), identity((3,))
        assert equal(tensor(f + g, h), tensor(f, h) + tensor(g, h))

    def test_permutation_words(self):
        """Test canonical words of permutations."""
        w0 = longest_perm(3)
        assert canonical_word(w0) == (1, 2, 1)
        assert length(w0) == 3
        assert perm_of_word((1, 2, 1), 3) == w0
        assert not is_reduced((1, 1), 2)


class TestReduction:
    """Test canonical forms."""

    def test_quadratic_relations(self):
        """Test ψ² for same, adjacent and distant colours."""
        assert reduce(word((2, 2), 1, 1)).is_zero()
        adjacent = reduce(word((1, 2), 1, 1))
        assert format_element(adjacent) == "x[1,0] e(1 2) + x[0,1] e(1 2)"
        assert equal(word((1, 3), 1, 1), identity((1, 3)))

    def test_nilhecke_dot_slides(self):
        """Test x1ψ − ψx2 = 1 and ψx1 − x2ψ = 1 on one colour."""
        colors = (1, 1)
        nw = word(colors, (1, 0), 1) - word(colors, 1, (0, 1))
        se = word(colors, 1, (1, 0)) - word(colors, (0, 1), 1)
        assert equal(nw, identity(colors))
        assert equal(se, identity(colors))

    def test_dot_migration_square(self):
        """Test x1²ψ − ψx2² = x1 + x2."""
        colors = (1, 1)
        lhs = word(colors, (2, 0), 1) - word(colors, 1, (0, 2))
        rhs = dot(1, colors) + dot(2, colors)
        assert equal(lhs, rhs)
        assert len(reduce(lhs)) == 2

    def test_reduce_is_idempotent(self):
        """Test reduce ∘ reduce = reduce."""
        element = word((1, 2, 1), 2, 1, 2, (1, 0, 0), 1)
        once = reduce(element)
        assert reduce(once) is once
        assert reduce(ThinElement(once.bottom, dict(once.terms), once.top)) == once

    def test_reduce_preserves_degree(self):
        """Test homogeneity of canonical forms."""
        element = word((1, 2, 1), 1, 2, 1, (0, 1, 0))
        assert reduce(element).degree in (None, element.degree)

    def test_equal_rejects_different_boundaries(self):
        """Test that equal raises on different bottoms."""
        with pytest.raises(BoundaryMismatchError):
            equal(identity((1, 2)), identity((2, 1)))

    def test_every_local_relation_reduces_consistently(self):
        """Test both sides of each local relation on three strands of sl(4)."""
        for colors, instance in all_relation_instances(4, 3):
            assert equal(instance.lhs, instance.rhs), (colors, instance.name)

    def test_relation_instances_cover_the_braid(self):
        """Test that the corrected braid appears for i j i with adjacent colours."""
        names = [instance.name for instance in relation_instances((1, 2, 1), 1)]
        assert "braid_correction" in names
        assert "quadratic_adjacent" in names

    def test_basis_never_exceeds_permutation_length(self):
        """Test that canonical terms carry at most ℓ(w) crossings."""
        element = reduce(word((1, 1, 1), 1, 2, 1, 2, 1, (2, 0, 1)))
        for term, _ in element:
            crossings = tuple(f for f in term if isinstance(f, int))
            assert is_reduced(crossings, 3)


class TestPolynomialRepresentation:
    """Test the polynomial action used as an independent oracle."""

    def test_examples(self):
        """Test x on 1, ∂ on x1 and the adjacent double crossing."""
        R1 = poly_ring(1)
        assert poly_action(dot(1, (1,)), R1.one)[1] == R1.gens[0]
        R2 = poly_ring(2)
        x1, x2 = R2.gens
        assert poly_action(crossing(1, (1, 1)), x1)[1] == R2.one
        f = x1 ** 2 + 3 * x2
        top, value = poly_action(word((1, 2), 1, 1), f)
        assert top == (1, 2)
        assert value == (x1 + x2) * f

    def test_oracle_examples(self):
        """Test zero against the empty element and ψ² against zero."""
        assert oracle_equal(zero((1, 1)), ThinElement((1, 1), {}))
        assert oracle_equal(word((1, 1), 1, 1), zero((1, 1)))
        assert not oracle_equal(dot(1, (1, 1)), dot(2, (1, 1)))

    def test_oracle_agrees_on_relations(self):
        """Test the oracle on every local relation of up to three strands."""
        for colors, instance in all_relation_instances(4, 3):
            assert oracle_equal(instance.lhs, instance.rhs, bound=3), (colors, instance.name)

    def test_oracle_agrees_with_equal_on_random_pairs(self):
        """Test equal ⇔ oracle_equal on seeded random pairs."""
        rng = np.random.default_rng(7)
        for _ in range(60):
            first, second = random_pair(rng, 4, 4, 6)
            assert equal(first, second) == oracle_equal(first, second)

    def test_default_monomials_match_the_full_family(self):
        """Test that multiplicity-bounded monomials decide like all a_i < k."""
        rng = np.random.default_rng(11)
        for _ in range(25):
            first, second = random_pair(rng, 4, 3, 5)
            full = oracle_equal(first, second, bound=len(first.bottom))
            assert oracle_equal(first, second) == full == equal(first, second)

    def test_monomial_families(self):
        """Test the sizes of the default and the bounded monomial families."""
        assert len(list(probe_monomials((1, 1, 2)))) == 4
        assert len(list(probe_monomials((1, 1, 2), bound=3))) == 27

    def test_unknown_orientation(self):
        """Test that an unknown orientation is rejected."""
        with pytest.raises(ValueError):
            poly_action(identity((1,)), poly_ring(1).one, "sideways")


class TestSerialization:
    """Test the text form of elements."""

    def test_format_of_basis_terms(self):
        """Test coefficients, signs and the zero element."""
        element = permutation_element((1, 0), (1, 1), (0, 2)).scale(-3) + dot(1, (1, 1))
        assert format_element(element) == "x[1,0] e(1 1) - 3 * psi[1] x[0,2] e(1 1)"
        assert format_element(zero((1,))) == "0"

    def test_parse_back_canonical_forms(self):
        """Test that reading a printed canonical form gives the same element."""
        element = reduce(word((1, 2, 1), 2, 1, (1, 0, 2), 2))
        assert equal(parse_element(format_element(element)), element)

    def test_parse_errors(self):
        """Test malformed input."""
        with pytest.raises(ParseError):
            parse_element("psi[3] e(1 1)")
        with pytest.raises(ParseError):
            parse_element("x[1] e(1 1)")
        with pytest.raises(ParseError):
            parse_element("psi[1 e(1 1)")
        with pytest.raises(ParseError):
            parse_element("")
