"""Breadth-first orbit and reachability search over labeled states.

States are raw membership words. Every generator is an involution, so the
move that discovered a state also leads back to its predecessor and a path
from the root is read off by walking predecessors and reversing.
"""

import logging
from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Optional, Set, Tuple

import numpy as np

from matroid_moves.config import get_config
from matroid_moves.errors import (
    BudgetExhaustedError,
    DomainError,
    IndeterminateError,
    InternalError,
    UnsupportedError,
)
from matroid_moves.matroid_state import Matroid, canonical_classes
from matroid_moves.models.moves import Move, MoveKind, MoveSequence
from matroid_moves.models.orbits import CoverageReport, CoverageRow
from matroid_moves.moves import replay, step_mask
from matroid_moves.projective_space import Space, cocircuit_mask

logger = logging.getLogger(__name__)

# Flag name -> GeneratorSet attribute, in the order names are reported
GENERATOR_FLAGS: Dict[str, str] = {
    "omega": "omega",
    "sigma": "sigma",
    "row-sigma": "row_sigma",
    "lambda": "lam",
    "hypcomp": "hypcomp",
    "swap+": "swap_on",
    "swap-": "swap_off",
}


@dataclass(frozen=True)
class GeneratorSet:
    """Which operations an orbit search may apply.

    Attributes:
        omega: Complementation
        sigma: Switching at every functional
        row_sigma: Switching at the standard row functionals only
        lam: Local complementation at every functional
        hypcomp: Hyperplane complementation at every functional
        swap_on: Pointed swaps at green pivots
        swap_off: Pointed swaps at red pivots

    Examples:
        >>> GeneratorSet.parse("sigma,omega").names()
        ['omega', 'sigma']
    """

    omega: bool = False
    sigma: bool = False
    row_sigma: bool = False
    lam: bool = False
    hypcomp: bool = False
    swap_on: bool = False
    swap_off: bool = False

    def __post_init__(self):
        if not any(getattr(self, attr) for attr in GENERATOR_FLAGS.values()):
            raise DomainError("A generator set needs at least one operation")

    @classmethod
    def parse(cls, text: str) -> "GeneratorSet":
        """Parse a comma list such as 'omega,sigma,lambda' or 'lambda,swap'.

        Raises:
            DomainError: On unknown names or an empty list
        """
        flags = {}
        for raw in text.split(","):
            name = raw.strip().lower()
            if not name:
                continue
            if name == "swap":
                flags["swap_on"] = flags["swap_off"] = True
            elif name in ("lam", "local"):
                flags["lam"] = True
            elif name in GENERATOR_FLAGS:
                flags[GENERATOR_FLAGS[name]] = True
            else:
                raise DomainError(f"Unknown generator {name!r}")
        return cls(**flags)

    def names(self) -> List[str]:
        return [name for name, attr in GENERATOR_FLAGS.items() if getattr(self, attr)]

    def moves(self, space: Space) -> List[Move]:
        """All candidate moves, sorted by tag then parameter."""
        functionals = list(space.elements())
        out: List[Move] = []
        if self.omega:
            out.append(Move.omega())
        if self.sigma:
            out += [Move.sigma(a) for a in functionals]
        elif self.row_sigma:
            out += [Move.sigma(1 << i) for i in range(space.r)]
        if self.lam:
            out += [Move.lam(a) for a in functionals]
        if self.hypcomp:
            out += [Move.hypcomp(a) for a in functionals]
        if self.swap_on:
            out += [Move.swap_on(f) for f in functionals]
        if self.swap_off:
            out += [Move.swap_off(f) for f in functionals]
        return sorted(out, key=Move.sort_key)


@dataclass
class OrbitTable:
    """Predecessor table of a breadth-first search.

    Attributes:
        space: The ambient geometry
        root: Mask of the start state
        gens: Generators used
        parents: State mask -> (predecessor mask, move); the root maps to
            (root, None)
        depth: Largest distance from the root among visited states
    """

    space: Space
    root: int
    gens: GeneratorSet
    parents: Dict[int, Tuple[int, Optional[Move]]] = field(default_factory=dict)
    depth: int = 0

    def __len__(self) -> int:
        return len(self.parents)

    def __contains__(self, mask: object) -> bool:
        return mask in self.parents

    def states(self) -> List[int]:
        return sorted(self.parents)

    def path_to(self, mask: int) -> MoveSequence:
        """Moves leading from the root to mask.

        Raises:
            DomainError: If mask was not visited
        """
        if mask not in self.parents:
            raise DomainError(f"State {mask:x} is not in the orbit table")
        backwards = []
        current = mask
        while current != self.root:
            previous, move = self.parents[current]
            backwards.append(move)
            current = previous
        return MoveSequence(moves=list(reversed(backwards)))

    def extract(self, mask: int) -> MoveSequence:
        """path_to, validated by replay from the root.

        Raises:
            InternalError: If the extracted path does not replay to mask
        """
        seq = self.path_to(mask)
        end = replay(self.space, Matroid.from_mask(self.space, self.root), seq)
        if end.mask != mask:
            raise InternalError(f"Extracted path to {mask:x} replays to {end.mask:x}")
        return seq


def _resolve_budget(space: Space, budget: Optional[int]) -> Optional[int]:
    config = get_config()
    if budget is None:
        budget = config.orbit_budget
    if budget is None and space.r > config.max_orbit_rank:
        raise UnsupportedError(
            f"Unbudgeted orbits are limited to r <= {config.max_orbit_rank}, got r={space.r}"
        )
    if budget is not None and budget < 1:
        raise DomainError(f"Budget must be positive, got {budget}")
    return budget


def _search(
    space: Space,
    start: Matroid,
    gens: GeneratorSet,
    budget: Optional[int],
    target: Optional[int] = None,
) -> OrbitTable:
    """Level-by-level BFS; stops early once target is discovered."""
    if start.space != space:
        raise DomainError(f"Start state has r={start.r}, expected r={space.r}")
    budget = _resolve_budget(space, budget)
    r = space.r
    candidates = gens.moves(space)
    table = OrbitTable(space=space, root=start.mask, gens=gens)
    table.parents[start.mask] = (start.mask, None)
    frontier = [start.mask]

    while frontier:
        discovered: List[int] = []
        for position, mask in enumerate(frontier):
            for move in candidates:
                if move.kind is MoveKind.SWAP_ON and not mask >> (move.param - 1) & 1:
                    continue
                if move.kind is MoveKind.SWAP_OFF and mask >> (move.param - 1) & 1:
                    continue
                image = step_mask(r, mask, move)
                if image in table.parents:
                    continue
                table.parents[image] = (mask, move)
                discovered.append(image)
                if image == target:
                    return table
                if budget is not None and len(table.parents) > budget:
                    pending = sorted(set(frontier[position:]) | set(discovered))
                    raise BudgetExhaustedError(
                        f"Orbit search exceeded its budget of {budget} states "
                        f"at depth {table.depth + 1}",
                        table=table,
                        frontier=pending,
                    )
        if not discovered:
            break
        table.depth += 1
        frontier = sorted(discovered)
        logger.debug(
            f"Level {table.depth}: {len(frontier)} new states, {len(table)} total"
        )
    return table


def orbit(
    space: Space, start: Matroid, gens: GeneratorSet, budget: Optional[int] = None
) -> OrbitTable:
    """Closure of start under the enabled moves.

    Args:
        space: The ambient geometry
        start: Root state
        gens: Enabled operations
        budget: Maximum number of visited states (default from config)

    Returns:
        The complete predecessor table

    Raises:
        UnsupportedError: If r is above max_orbit_rank and no budget is set
        BudgetExhaustedError: If the orbit is larger than the budget

    Examples:
        >>> len(orbit(Space(3), Matroid.full(Space(3)), GeneratorSet(omega=True, sigma=True)))
        16
    """
    table = _search(space, start, gens, budget)
    logger.info(
        f"Orbit of {start.mask:x} in P_{space.r} under {','.join(gens.names())}: "
        f"{len(table)} states, depth {table.depth}"
    )
    return table


def reachable(
    space: Space,
    source: Matroid,
    target: Matroid,
    gens: GeneratorSet,
    budget: Optional[int] = None,
) -> Optional[MoveSequence]:
    """Shortest move sequence from source to target, or None outside the orbit.

    Raises:
        IndeterminateError: If the budget runs out before the question is settled
    """
    if target.space != space:
        raise DomainError(f"Target has r={target.r}, expected r={space.r}")
    if source.mask == target.mask:
        return MoveSequence()
    try:
        table = _search(space, source, gens, budget, target=target.mask)
    except BudgetExhaustedError as e:
        raise IndeterminateError(
            f"Reachability of {target.mask:x} undecided: {e}",
            table=e.table,
            frontier=e.frontier,
        ) from e
    if target.mask not in table:
        logger.info(f"{target.mask:x} is outside the orbit of {source.mask:x}")
        return None
    return table.extract(target.mask)


# =============================================================================
# Coverage
# =============================================================================


def _popcounts(n: int) -> np.ndarray:
    masks = np.arange(1 << n, dtype=np.int64)
    counts = np.zeros(1 << n, dtype=np.int64)
    for bit in range(n):
        counts += (masks >> bit) & 1
    return counts


def coverage_report(table: OrbitTable) -> CoverageReport:
    """Visited states and canonical classes per cardinality.

    Raises:
        UnsupportedError: If r > 4
    """
    space = table.space
    canon = canonical_classes(space)
    sizes = _popcounts(space.n)
    visited = np.zeros(1 << space.n, dtype=bool)
    visited[np.fromiter(table.parents.keys(), dtype=np.int64)] = True

    rows = []
    for k in range(space.n + 1):
        of_size = sizes == k
        rows.append(
            CoverageRow(
                size=k,
                states=int(np.count_nonzero(visited & of_size)),
                total_states=comb(space.n, k),
                classes=len(np.unique(canon[visited & of_size])),
                total_classes=len(np.unique(canon[of_size])),
            )
        )
    report = CoverageReport(
        r=space.r, root=table.root, generators=table.gens.names(), rows=rows
    )
    logger.info(
        f"Coverage: {report.visited} states, "
        f"{report.visited_classes}/{report.total_classes} classes"
    )
    return report


# =============================================================================
# Closed-form sigma/omega orbits
# =============================================================================


def _functional_of(space: Space, mask: int) -> int:
    """The only functional a whose cocircuit could equal mask."""
    return sum(1 << i for i in range(space.r) if mask >> ((1 << i) - 1) & 1)


def _is_cocircuit(space: Space, mask: int) -> bool:
    a = _functional_of(space, mask)
    return a != 0 and cocircuit_mask(space.r, a) == mask


def same_sigma_omega_orbit(M1: Matroid, M2: Matroid) -> bool:
    """True if a word in omega and sigma takes M1 to M2.

    Words reduce to i, omega, sigma_a or omega sigma_a, so the symmetric
    difference must be empty, E(P_r), a cocircuit or a hyperplane.
    """
    if M1.space != M2.space:
        raise DomainError(f"Cannot compare r={M1.r} with r={M2.r}")
    space = M1.space
    diff = M1.mask ^ M2.mask
    if diff in (0, space.full_mask):
        return True
    return _is_cocircuit(space, diff) or _is_cocircuit(space, diff ^ space.full_mask)


def sigma_omega_orbit_states(space: Space, start: Optional[Matroid] = None) -> Set[int]:
    """The omega/sigma orbit of start (default P_r) without search."""
    root = space.full_mask if start is None else start.mask
    states = {root, root ^ space.full_mask}
    for a in space.elements():
        coc = cocircuit_mask(space.r, a)
        states.add(root ^ coc)
        states.add(root ^ coc ^ space.full_mask)
    return states

