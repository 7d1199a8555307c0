"""
Tests for partitions, Schur polynomials, Littlewood-Richardson coefficients and quantum numbers
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.symfunc.littlewood import lr_coeff, multi_lr_coeff, schur_product, skew_schur, skew_schur_determinant
from src.symfunc.partitions import (
    EMPTY,
    Partition,
    conjugate,
    enumerate_partitions,
    hat,
    parse_partition,
    partitions_of,
    rect_complement,
    rect_plus,
    rectangle,
)
from src.symfunc.polynomials import divided_difference, is_symmetric, poly_ring
from src.symfunc.quantum import (
    QLaurent,
    quantum_binomial,
    quantum_binomial_partition,
    quantum_factorial,
    quantum_int,
    q_divided_power_product,
)
from src.symfunc.schur import elementary, jacobi_trudi, schur_bialternant, schur_giambelli, straighten
from src.utils.errors import ParseError, PartitionError

P = Partition.of

small_shapes = st.sampled_from(enumerate_partitions(3, 3))


class TestPartitions:
    """Test partition enumeration and rectangle combinatorics."""

    def test_enumerate_small_rectangles(self):
        """Test P(1,1), P(a,0) and P(2,2)."""
        assert enumerate_partitions(1, 1) == (EMPTY, P(1))
        assert enumerate_partitions(3, 0) == (EMPTY,)
        assert set(enumerate_partitions(2, 2)) == {EMPTY, P(1), P(2), P(1, 1), P(2, 1), P(2, 2)}

    def test_conjugate_examples(self):
        """Test conjugation on the empty shape and two hooks."""
        assert conjugate(EMPTY) == EMPTY
        assert conjugate(P(2, 1)) == P(2, 1)
        assert conjugate(P(3, 1)) == P(2, 1, 1)

    def test_rect_complement_examples(self):
        """Test complements inside a rectangle."""
        assert rect_complement(EMPTY, 2, 3) == rectangle(2, 3)
        assert rect_complement(P(1), 2, 2) == P(2, 1)
        assert rect_complement(P(2), 1, 3) == P(1)

    def test_hat_examples(self):
        """Test α̂ on the empty shape, the full rectangle and a single box."""
        assert hat(EMPTY, 2, 3) == rectangle(3, 2)
        assert hat(rectangle(2, 3), 2, 3) == EMPTY
        assert hat(P(1), 1, 1) == EMPTY

    def test_rect_plus(self):
        """Test adding a rectangle to a shape with at most `rows` parts."""
        assert rect_plus(P(2, 1), 2, 3) == P(5, 4)
        assert rect_plus(EMPTY, 2, 1) == rectangle(2, 1)
        with pytest.raises(PartitionError):
            rect_plus(P(1, 1, 1), 2, 1)

    def test_complement_rejects_oversized_shape(self):
        """Test that a shape outside the rectangle is rejected."""
        with pytest.raises(PartitionError):
            rect_complement(P(3), 1, 2)

    def test_parse_partition(self):
        """Test the command-line partition syntax."""
        assert parse_partition("2,2,1") == P(2, 2, 1)
        assert parse_partition("0") == EMPTY
        assert parse_partition("(3,1)") == P(3, 1)
        with pytest.raises(ParseError):
            parse_partition("2,x")
        with pytest.raises(ParseError):
            parse_partition("1,2")

    @given(small_shapes)
    def test_conjugate_is_an_involution(self, alpha):
        """Test that conjugating twice is the identity."""
        assert conjugate(conjugate(alpha)) == alpha

    def test_hat_duality(self):
        """Test that hat maps P(a,b) into P(b,a) and back for a, b ≤ 4."""
        for a in range(5):
            for b in range(5):
                for alpha in enumerate_partitions(a, b):
                    dual = hat(alpha, a, b)
                    assert dual.fits(b, a)
                    assert hat(dual, b, a) == alpha

    @given(small_shapes)
    def test_complement_is_an_involution(self, alpha):
        """Test that complementing twice inside K_{3,3} is the identity."""
        assert rect_complement(rect_complement(alpha, 3, 3), 3, 3) == alpha


class TestSchurPolynomials:
    """Test the three Schur constructions against each other."""

    def test_bialternant_examples(self):
        """Test π_(1), π_(2,1) and the extended-zero convention."""
        R = poly_ring(2)
        x1, x2 = R.gens
        assert schur_bialternant(P(1), 2) == x1 + x2
        assert schur_bialternant(P(2, 1), 2) == x1 ** 2 * x2 + x1 * x2 ** 2
        assert schur_bialternant(P(2, 1, 1), 2) == R.zero

    def test_elementary_examples(self):
        """Test ε_0, ε_{-1} and ε_2 in three variables."""
        R = poly_ring(3)
        x1, x2, x3 = R.gens
        assert elementary(0, 3) == R.one
        assert elementary(-1, 3) == R.zero
        assert elementary(4, 3) == R.zero
        assert elementary(2, 3) == x1 * x2 + x1 * x3 + x2 * x3

    def test_giambelli_examples(self):
        """Test det[ε] on (2), (2,1) and the empty shape."""
        assert schur_giambelli(P(2), 3) == schur_bialternant(P(1, 1), 3)
        assert schur_giambelli(P(2, 1), 3) == schur_bialternant(P(2, 1), 3)
        assert schur_giambelli(EMPTY, 3) == poly_ring(3).one

    @settings(max_examples=30, deadline=None)
    @given(small_shapes, st.integers(min_value=1, max_value=4))
    def test_giambelli_matches_bialternant_of_conjugate(self, alpha, m):
        """Test det[ε_{α_i+j−i}] = π_ᾱ."""
        assert schur_giambelli(alpha, m) == schur_bialternant(conjugate(alpha), m)

    @settings(max_examples=30, deadline=None)
    @given(small_shapes, st.integers(min_value=1, max_value=4))
    def test_jacobi_trudi_matches_bialternant(self, alpha, m):
        """Test det[h_{α_i+j−i}] = π_α."""
        assert jacobi_trudi(alpha, m) == schur_bialternant(alpha, m)

    @settings(max_examples=20, deadline=None)
    @given(small_shapes)
    def test_schur_polynomials_are_symmetric(self, alpha):
        """Test symmetry of π_α in three variables."""
        assert is_symmetric(schur_bialternant(alpha, 3))

    def test_divided_difference_of_a_single_variable(self):
        """Test ∂_1 x1 = 1."""
        R = poly_ring(2)
        assert divided_difference(R.gens[0], 1) == R.one

    def test_straighten(self):
        """Test rewriting π of an arbitrary sequence."""
        assert straighten((2, 1)) == (1, P(2, 1))
        assert straighten((0, 1)) == (0, EMPTY)
        assert straighten((0, 2)) == (-1, P(1, 1))
        assert straighten((-2, 0)) == (0, EMPTY)


class TestLittlewoodRichardson:
    """Test LR coefficients, products and skew Schur polynomials."""

    def test_product_expansions(self):
        """Test π_(2,2)·π_(1) and π_(1)·π_(1)."""
        assert schur_product([P(2, 2), P(1)]) == {P(3, 2): 1, P(2, 2, 1): 1}
        assert list(schur_product([P(1), P(1)]).items()) == [(P(2), 1), (P(1, 1), 1)]

    def test_lr_coefficients(self):
        """Test the unit, the first nontrivial case and the size rule."""
        assert lr_coeff(EMPTY, P(2, 1), P(2, 1)) == 1
        assert lr_coeff(EMPTY, P(2, 1), P(3)) == 0
        assert lr_coeff(P(1), P(1), P(2)) == 1
        assert lr_coeff(P(1), P(1), P(1, 1)) == 1
        assert lr_coeff(P(2, 1), P(2, 1), P(3, 2, 1)) == 2

    def test_rectangle_duality(self):
        """Test c^{K_{a,b}}_{γ,ψ} = δ_{ψ, K_{a,b}−γ}."""
        a, b = 2, 2
        box = rectangle(a, b)
        for gamma in enumerate_partitions(a, b):
            for psi in enumerate_partitions(a, b):
                expected = 1 if psi == rect_complement(gamma, a, b) else 0
                assert lr_coeff(gamma, psi, box) == expected

    def test_shifted_rectangle_duality(self):
        """Test c^{ν+K_{a,b}}_{γ,ψ} = c^ψ_{ν,K_{a,b}−γ} for ψ, ν ∈ P(a), γ ∈ P(a,b), |ν| ≤ 3."""
        for a in (1, 2):
            for b in (1, 2):
                nus = [nu for size in range(4) for nu in partitions_of(size, max_parts=a)]
                for nu in nus:
                    shifted = rect_plus(nu, a, b)
                    for gamma in enumerate_partitions(a, b):
                        complement = rect_complement(gamma, a, b)
                        for psi in partitions_of(shifted.size - gamma.size, max_parts=a):
                            assert lr_coeff(gamma, psi, shifted) == lr_coeff(nu, complement, psi)

    def test_coefficients_are_stable_in_the_number_of_variables(self):
        """Test that extra variables beyond the length of γ change nothing."""
        shapes = enumerate_partitions(2, 2)
        for alpha in shapes:
            for beta in shapes:
                targets = set(schur_product([alpha, beta])) | {P(2, 2, 2), P(4, 1)}
                for gamma in targets:
                    first = max(gamma.length, 1)
                    values = {lr_coeff(alpha, beta, gamma, m=m) for m in range(first, first + 3)}
                    assert values == {lr_coeff(alpha, beta, gamma)}

    def test_multi_lr_coefficients(self):
        """Test the triple product of single boxes."""
        assert multi_lr_coeff([EMPTY, EMPTY, EMPTY], EMPTY) == 1
        assert multi_lr_coeff([P(1), P(1), P(1)], P(2, 1)) == 2
        ones = [EMPTY, P(1)]
        for alpha in ones:
            for beta in ones:
                for gamma in ones:
                    expected = 1 if [alpha, beta, gamma].count(P(1)) == 1 else 0
                    assert multi_lr_coeff([alpha, beta, gamma], P(1)) == expected

    def test_multi_lr_needs_two_factors(self):
        """Test rejection of a single factor."""
        with pytest.raises(PartitionError):
            multi_lr_coeff([P(1)], P(1))

    @settings(max_examples=25, deadline=None)
    @given(small_shapes, small_shapes)
    def test_lr_is_symmetric(self, alpha, beta):
        """Test c^γ_{α,β} = c^γ_{β,α} over the whole product."""
        assert schur_product([alpha, beta]) == schur_product([beta, alpha])

    def test_skew_schur_examples(self):
        """Test γ/∅, γ/γ and (2,1)/(1)."""
        R = poly_ring(2)
        x1, x2 = R.gens
        assert skew_schur(P(2, 1), EMPTY, 2) == schur_bialternant(P(2, 1), 2)
        assert skew_schur(P(2, 1), P(2, 1), 2) == R.one
        assert skew_schur(P(2, 1), P(1), 2) == (x1 + x2) ** 2
        assert skew_schur(P(1), P(2), 2) == R.zero

    @settings(max_examples=25, deadline=None)
    @given(small_shapes, small_shapes)
    def test_skew_schur_matches_determinant(self, gamma, alpha):
        """Test the LR form of π_{γ/α} against its determinant form."""
        assert skew_schur(gamma, alpha, 3) == skew_schur_determinant(gamma, alpha, 3)


class TestQuantumNumbers:
    """Test quantum integers, factorials and binomials."""

    def test_small_values(self):
        """Test [2], [1]! and [4 choose 2]."""
        assert quantum_int(2) == QLaurent.from_terms({-1: 1, 1: 1})
        assert quantum_factorial(1) == 1
        assert quantum_binomial(4, 2) == QLaurent.from_terms({-4: 1, -2: 1, 0: 2, 2: 1, 4: 1})

    def test_binomial_rejects_bad_arguments(self):
        """Test k outside 0..n."""
        with pytest.raises(PartitionError):
            quantum_binomial(2, 3)
        with pytest.raises(PartitionError):
            quantum_binomial(2, -1)

    def test_partition_sum_examples(self):
        """Test the sum over P(a,b) on (1,1), (a,0) and (2,2)."""
        assert str(quantum_binomial_partition(1, 1)) == "q^-1 + q"
        assert quantum_binomial_partition(3, 0) == 1
        assert str(quantum_binomial_partition(2, 2)) == "q^-4 + q^-2 + 2 + q^2 + q^4"

    @given(st.integers(min_value=0, max_value=6), st.integers(min_value=0, max_value=6))
    def test_partition_sum_matches_binomial(self, a, b):
        """Test Σ_{α∈P(a,b)} q^{2|α|−ab} = [a+b choose a]."""
        assert quantum_binomial_partition(a, b) == q_divided_power_product(a, b)

    @given(st.integers(min_value=0, max_value=8), st.integers(min_value=0, max_value=8))
    def test_binomials_are_bar_invariant(self, n, k):
        """Test p(q) = p(q⁻¹) for quantum binomials."""
        if k <= n:
            assert quantum_binomial(n, k).is_bar_invariant()

    def test_laurent_arithmetic(self):
        """Test addition, negation and printing of negative coefficients."""
        value = QLaurent.power(-1) - QLaurent.power(2) * 3
        assert str(value) == "q^-1 - 3*q^2"
        assert not (value + (-value))
        assert str(QLaurent()) == "0"
