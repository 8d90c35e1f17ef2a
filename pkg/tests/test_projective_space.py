"""Tests for the projective space module."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matroid_moves.errors import DomainError
from matroid_moves.projective_space import (
    Functional,
    GroundSet,
    Space,
    affine_subgeometry_formula,
    basis_of,
    closure,
    closure_mask,
    cocircuit,
    count_affine_subgeometries,
    dot,
    dual_basis,
    flats_of_rank,
    hyperplane,
    hyperplanes_containing,
    is_flat,
    rank,
    rank_of_mask,
    smallest_nonzero_solution,
    solve_gf2,
    standard_basis,
    standard_flat,
)


class TestSpace:
    """Tests for the Space value type."""

    def test_sizes(self):
        """Test point counts and the full mask."""
        space = Space(3)

        assert space.n == 7
        assert space.full_mask == 127
        assert list(space.elements()) == [1, 2, 3, 4, 5, 6, 7]

    @pytest.mark.parametrize("r", [0, 32, -1])
    def test_rank_out_of_range(self, r):
        """Test that ranks outside 1..31 are rejected."""
        with pytest.raises(DomainError):
            Space(r)

    def test_rank_must_be_int(self):
        """Test that booleans are not accepted as ranks."""
        with pytest.raises(DomainError):
            Space(True)

    def test_check_element(self, p3):
        """Test element range checks."""
        assert p3.check_element(7) == 7
        with pytest.raises(DomainError, match="outside 1..7"):
            p3.check_element(8)
        with pytest.raises(DomainError):
            p3.check_element(0)

    def test_check_functional_accepts_wrapper(self, p3):
        """Test that a Functional unwraps to its value."""
        assert p3.check_functional(Functional(5)) == 5

    def test_check_mask(self, p3):
        """Test that masks with bits beyond n are rejected."""
        with pytest.raises(DomainError):
            p3.check_mask(128)

    def test_functional_must_be_positive(self):
        """Test that the zero functional is rejected."""
        with pytest.raises(DomainError):
            Functional(0)


class TestGroundSet:
    """Tests for the GroundSet value type."""

    def test_from_elements(self, p3):
        """Test building a set from elements."""
        S = GroundSet.from_elements(p3, [1, 2, 5, 6])

        assert S.mask == 0x33
        assert len(S) == 4
        assert 5 in S
        assert 3 not in S

    def test_complement(self, p3):
        """Test the red set of a colouring."""
        assert GroundSet.from_elements(p3, [1, 2]).complement().elements() == [3, 4, 5, 6, 7]

    def test_set_algebra(self, p3):
        """Test xor, and, or and difference."""
        A = GroundSet.from_elements(p3, [1, 2, 3])
        B = GroundSet.from_elements(p3, [3, 4])

        assert (A ^ B).elements() == [1, 2, 4]
        assert (A & B).elements() == [3]
        assert (A | B).elements() == [1, 2, 3, 4]
        assert (A - B).elements() == [1, 2]
        assert (A & B).is_subset(A)

    def test_mixing_spaces(self, p3, p4):
        """Test that sets from different spaces cannot be combined."""
        with pytest.raises(DomainError):
            GroundSet.full(p3) ^ GroundSet.full(p4)

    def test_mask_out_of_range(self, p3):
        """Test that oversized masks are rejected."""
        with pytest.raises(DomainError):
            GroundSet(p3, 1 << 7)


class TestCocircuits:
    """Tests for dot products, cocircuits and hyperplanes."""

    def test_dot(self):
        """Test the GF(2) pairing."""
        assert dot(6, 4) == 1
        assert dot(3, 3) == 0
        assert dot(Functional(7), 1) == 1

    def test_dot_range_check(self, p3):
        """Test that dot checks ranges when given a space."""
        with pytest.raises(DomainError):
            dot(3, 8, space=p3)

    def test_cocircuit_example(self, p3):
        """Test the cocircuit of a = 3 in P_3."""
        assert cocircuit(p3, 3).elements() == [1, 2, 5, 6]

    def test_hyperplane_example(self, p3):
        """Test the hyperplane of a = 7 in P_3."""
        assert hyperplane(p3, 7).elements() == [3, 5, 6]

    @pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
    def test_sizes_and_partition(self, r):
        """Test that cocircuit and hyperplane partition E(P_r)."""
        space = Space(r)
        for a in space.elements():
            C = cocircuit(space, a)
            H = hyperplane(space, a)
            assert len(C) == 1 << (r - 1)
            assert len(H) == (1 << (r - 1)) - 1
            assert (C | H).mask == space.full_mask
            assert (C & H).mask == 0

    def test_hyperplanes_are_flats(self, p4):
        """Test that every hyperplane is closed of rank r - 1."""
        for a in p4.elements():
            H = hyperplane(p4, a)
            assert is_flat(p4, H)
            assert rank(p4, H) == 3

    def test_out_of_range_functional(self, p3):
        """Test that functionals outside 1..n are rejected."""
        with pytest.raises(DomainError):
            cocircuit(p3, 8)

    @pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
    def test_cocircuits_span(self, r):
        """Test that every projective cocircuit has rank r."""
        space = Space(r)
        for a in space.elements():
            assert rank(space, cocircuit(space, a)) == r

    def test_hyperplanes_containing_point(self, p3):
        """Test that three hyperplanes pass through each point."""
        assert hyperplanes_containing(p3, 1) == [2, 4, 6]

    def test_hyperplanes_containing_line(self, p4):
        """Test the three hyperplanes through the line {1, 2, 3}."""
        assert hyperplanes_containing(p4, standard_flat(p4, 2)) == [4, 8, 12]


class TestRankClosure:
    """Tests for rank, bases and closure."""

    def test_rank_of_line(self, p3):
        """Test the rank of a line."""
        assert rank(p3, GroundSet.from_elements(p3, [1, 2, 3])) == 2

    def test_rank_of_empty_and_full(self, p4):
        """Test rank 0 for the empty set and r for E(P_r)."""
        assert rank(p4, 0) == 0
        assert rank(p4, p4.full_mask) == 4

    def test_closure_of_pair(self, p3):
        """Test that two points close to a line."""
        assert closure(p3, GroundSet.from_elements(p3, [1, 2])).elements() == [1, 2, 3]

    def test_basis_is_least(self, p3):
        """Test that the greedy basis skips dependent points."""
        assert basis_of(p3, GroundSet.from_elements(p3, [1, 2, 3, 4])) == [1, 2, 4]

    def test_closure_laws_rank_three(self, p3):
        """Test that closure is extensive, idempotent and rank-preserving on P_3."""
        for S in range(1 << p3.n):
            cl = closure(p3, S).mask
            assert S & ~cl == 0
            assert closure(p3, cl).mask == cl
            assert rank(p3, cl) == rank(p3, S)
            for x in p3.elements():
                assert cl & ~closure(p3, S | 1 << (x - 1)).mask == 0

    @settings(max_examples=1000)
    @given(data=st.data())
    def test_closure_laws_random(self, data):
        """Test the closure laws on random subsets of P_4 and P_5."""
        space = Space(data.draw(st.sampled_from([4, 5])))
        S = data.draw(st.integers(min_value=0, max_value=space.full_mask))
        T = data.draw(st.integers(min_value=0, max_value=space.full_mask))
        cl = closure_mask(S)

        assert S & ~cl == 0
        assert closure_mask(cl) == cl
        assert rank_of_mask(cl) == rank_of_mask(S)
        assert cl & ~closure_mask(S | T) == 0
        assert is_flat(space, cl)

    @pytest.mark.parametrize("k,count", [(0, 1), (1, 7), (2, 7), (3, 1)])
    def test_flats_of_rank_p3(self, p3, k, count):
        """Test flat counts in the Fano plane."""
        flats = flats_of_rank(p3, k)

        assert len(flats) == count
        assert all(rank(p3, F) == k and is_flat(p3, F) for F in flats)

    def test_lines_of_p4(self, p4):
        """Test that PG(3,2) has 35 lines."""
        assert len(flats_of_rank(p4, 2)) == 35

    def test_standard_flat(self, p4):
        """Test the flat spanned by e_1, e_2."""
        assert standard_flat(p4, 2) == 0b111
        with pytest.raises(DomainError):
            standard_flat(p4, 5)


class TestLinearAlgebra:
    """Tests for the GF(2) solver and dual bases."""

    def test_inconsistent_system(self):
        """Test that a contradictory system has no solution."""
        assert solve_gf2([1, 1], [0, 1], 1) is None

    def test_smallest_nonzero_solution(self):
        """Test choosing the least solution."""
        assert smallest_nonzero_solution([1, 2], [1, 1], 3) == 3

    def test_homogeneous_system_skips_zero(self):
        """Test that the zero solution is never returned."""
        assert smallest_nonzero_solution([1], [0], 2) == 2

    def test_dual_of_standard_basis(self, p3):
        """Test that the standard basis is self-dual."""
        assert dual_basis(p3, standard_basis(p3)) == [1, 2, 4]

    def test_dual_basis(self, p3):
        """Test a non-standard basis."""
        duals = dual_basis(p3, [1, 3, 4])

        assert duals == [3, 2, 4]
        for i, d in enumerate(duals):
            assert [dot(d, b) for b in [1, 3, 4]] == [int(i == j) for j in range(3)]

    def test_dual_of_dependent_set(self, p3):
        """Test that a dependent list is not a basis."""
        with pytest.raises(DomainError):
            dual_basis(p3, [1, 2, 3])


class TestAffineSubgeometries:
    """Tests for counting copies of AG(r-3,2)."""

    @pytest.mark.parametrize("r,expected", [(3, 7), (4, 105), (5, 1085)])
    def test_formula(self, r, expected):
        """Test the closed form."""
        assert affine_subgeometry_formula(r) == expected

    @pytest.mark.parametrize("r", [3, 4, 5])
    def test_enumeration_matches_formula(self, r):
        """Test that enumeration agrees with the closed form."""
        assert count_affine_subgeometries(Space(r)) == affine_subgeometry_formula(r)

    def test_rank_too_small(self):
        """Test that r < 3 is rejected."""
        with pytest.raises(DomainError):
            count_affine_subgeometries(Space(2))
