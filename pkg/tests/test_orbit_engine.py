"""Tests for orbit and reachability search."""

import pytest

from matroid_moves.config import MovesConfig, set_config
from matroid_moves.errors import (
    BudgetExhaustedError,
    DomainError,
    IndeterminateError,
    UnsupportedError,
)
from matroid_moves.matroid_state import Matroid
from matroid_moves.models.moves import Move
from matroid_moves.moves import replay
from matroid_moves.orbit_engine import (
    GeneratorSet,
    coverage_report,
    orbit,
    reachable,
    same_sigma_omega_orbit,
    sigma_omega_orbit_states,
)
from matroid_moves.projective_space import Space, cocircuit_mask, hyperplane_mask

SIGMA_OMEGA = GeneratorSet(omega=True, sigma=True)


class TestGeneratorSet:
    """Tests for GeneratorSet."""

    def test_parse_and_names(self):
        """Test that names come out in generator order."""
        assert GeneratorSet.parse("sigma,omega").names() == ["omega", "sigma"]

    def test_swap_enables_both_kinds(self):
        """Test the 'swap' shorthand."""
        gens = GeneratorSet.parse("lambda, swap")

        assert gens.lam and gens.swap_on and gens.swap_off
        assert gens.names() == ["lambda", "swap+", "swap-"]

    def test_unknown_name(self):
        """Test that unknown generators raise DomainError."""
        with pytest.raises(DomainError, match="rotate"):
            GeneratorSet.parse("omega,rotate")

    def test_empty_set(self):
        """Test that at least one generator is required."""
        with pytest.raises(DomainError):
            GeneratorSet()
        with pytest.raises(DomainError):
            GeneratorSet.parse("")

    def test_moves_sorted(self):
        """Test that candidate moves are sorted by tag then parameter."""
        moves = SIGMA_OMEGA.moves(Space(2))

        assert moves == [Move.omega(), Move.sigma(1), Move.sigma(2), Move.sigma(3)]

    def test_row_sigma(self, p3):
        """Test switching on row functionals only."""
        assert GeneratorSet(row_sigma=True).moves(p3) == [
            Move.sigma(1),
            Move.sigma(2),
            Move.sigma(4),
        ]


class TestOrbit:
    """Tests for breadth-first orbits."""

    @pytest.mark.parametrize("r,size", [(2, 8), (3, 16), (4, 32)])
    def test_sigma_omega_orbit_of_full(self, r, size):
        """Test that the sigma/omega orbit of P_r has 2 + 2(2^r - 1) states."""
        space = Space(r)
        table = orbit(space, Matroid.full(space), SIGMA_OMEGA)

        assert len(table) == size
        assert set(table.states()) == sigma_omega_orbit_states(space)

    def test_orbit_contents(self, p3, full3):
        """Test that the orbit is P_3, U_{0,0}, hyperplanes and cocircuits."""
        table = orbit(p3, full3, SIGMA_OMEGA)

        assert 0 in table
        assert 127 in table
        for a in p3.elements():
            assert hyperplane_mask(3, a) in table
            assert cocircuit_mask(3, a) in table

    @pytest.mark.parametrize("gens", ["lambda,swap", "omega,sigma,lambda"])
    def test_membership_is_symmetric(self, p3, gens):
        """Test that y is in the orbit of x exactly when x is in the orbit of y."""
        generators = GeneratorSet.parse(gens)
        orbits = {
            mask: set(orbit(p3, Matroid.from_mask(p3, mask), generators).states())
            for mask in range(1 << p3.n)
        }
        for x, members in orbits.items():
            for y in members:
                assert x in orbits[y]

    def test_paths_replay(self, p3, full3):
        """Test that every extracted path replays to its state."""
        table = orbit(p3, full3, GeneratorSet(lam=True, swap_on=True, swap_off=True))
        for state in table.states():
            seq = table.extract(state)
            assert replay(p3, full3, seq).mask == state

    def test_paths_are_shortest(self, p3, full3):
        """Test that BFS paths have the depth of their level."""
        table = orbit(p3, full3, SIGMA_OMEGA)

        assert len(table.path_to(127)) == 0
        assert len(table.path_to(0)) == 1
        assert len(table.path_to(cocircuit_mask(3, 1))) == 2
        assert table.depth == 2

    def test_path_to_unvisited(self, p3, full3):
        """Test that unvisited states raise DomainError."""
        table = orbit(p3, full3, SIGMA_OMEGA)

        with pytest.raises(DomainError):
            table.path_to(1)

    def test_budget_exhausted(self, p3, full3):
        """Test that a small budget yields a partial table."""
        with pytest.raises(BudgetExhaustedError) as excinfo:
            orbit(p3, full3, SIGMA_OMEGA, budget=5)

        assert len(excinfo.value.table) == 6
        assert excinfo.value.frontier

    def test_budget_from_config(self, p3, full3):
        """Test that the configured budget applies when none is passed."""
        set_config(MovesConfig(orbit_budget=3))

        with pytest.raises(BudgetExhaustedError):
            orbit(p3, full3, SIGMA_OMEGA)

    def test_unbudgeted_large_rank(self):
        """Test that unbudgeted orbits are limited to small ranks."""
        space = Space(5)

        with pytest.raises(UnsupportedError):
            orbit(space, Matroid.full(space), SIGMA_OMEGA)

    def test_budgeted_large_rank(self):
        """Test that a budget unlocks larger ranks."""
        space = Space(5)
        table = orbit(space, Matroid.full(space), SIGMA_OMEGA, budget=100)

        assert len(table) == 2 + 2 * 31

    def test_invalid_budget(self, p3, full3):
        """Test that budgets must be positive."""
        with pytest.raises(DomainError):
            orbit(p3, full3, SIGMA_OMEGA, budget=0)


class TestReachable:
    """Tests for reachability queries."""

    def test_same_state(self, p3, full3):
        """Test the empty sequence for identical states."""
        assert len(reachable(p3, full3, full3, SIGMA_OMEGA)) == 0

    def test_shortest_sequence(self, p3, full3):
        """Test reaching a hyperplane in one switching."""
        seq = reachable(p3, full3, Matroid.from_mask(p3, hyperplane_mask(3, 7)), SIGMA_OMEGA)

        assert seq.moves == [Move.sigma(7)]

    def test_unreachable(self, p3, full3):
        """Test that a single point is outside the sigma/omega orbit."""
        assert reachable(p3, full3, Matroid.from_elements(p3, [1]), SIGMA_OMEGA) is None

    def test_indeterminate(self, p3, full3):
        """Test that running out of budget is not a negative answer."""
        target = Matroid.from_elements(p3, [1, 2])
        gens = GeneratorSet(lam=True, swap_on=True, swap_off=True)

        with pytest.raises(IndeterminateError):
            reachable(p3, full3, target, gens, budget=2)

    def test_lambda_swap_reaches_pairs(self, p3, full3):
        """Test that a two-point set is reachable with lambda and swaps."""
        target = Matroid.from_elements(p3, [1, 2])
        seq = reachable(p3, full3, target, GeneratorSet(lam=True, swap_on=True, swap_off=True))

        assert seq is not None
        assert replay(p3, full3, seq) == target


class TestSigmaOmegaClosedForm:
    """Tests for the closed-form sigma/omega orbit."""

    def test_states(self, p3):
        """Test the closed form on P_3."""
        states = sigma_omega_orbit_states(p3)

        assert len(states) == 16
        assert {0, 127} <= states

    def test_membership_matches_search(self, p3):
        """Test same_sigma_omega_orbit against BFS from several roots."""
        for root in (0b1, 0b1011, 0b1110010):
            start = Matroid.from_mask(p3, root)
            table = orbit(p3, start, SIGMA_OMEGA)
            for mask in range(128):
                other = Matroid.from_mask(p3, mask)
                assert same_sigma_omega_orbit(start, other) == (mask in table)

    def test_examples(self, p3, full3):
        """Test P_3 against a cocircuit and a single point."""
        assert same_sigma_omega_orbit(full3, Matroid.from_mask(p3, cocircuit_mask(3, 2)))
        assert not same_sigma_omega_orbit(full3, Matroid.from_elements(p3, [1]))


class TestCoverage:
    """Tests for coverage reports."""

    def test_sigma_omega_coverage(self, p3, full3):
        """Test per-size coverage of the sigma/omega orbit."""
        report = coverage_report(orbit(p3, full3, SIGMA_OMEGA))
        rows = {row.size: row for row in report.rows}

        assert report.visited == 16
        assert rows[3].states == 7
        assert rows[3].classes == 1
        assert rows[3].total_classes == 2
        assert rows[4].states == 7
        assert rows[1].states == 0
        assert not report.complete

    def test_frame(self, p3, full3):
        """Test the DataFrame has one row per size."""
        frame = coverage_report(orbit(p3, full3, SIGMA_OMEGA)).to_frame()

        assert len(frame) == 8

    @pytest.mark.slow
    def test_rank_four_completeness(self, p4, full4):
        """Test that omega, sigma and lambda reach every class of P_4."""
        table = orbit(p4, full4, GeneratorSet(omega=True, sigma=True, lam=True))
        report = coverage_report(table)

        assert report.complete
        assert report.total_classes == report.visited_classes
