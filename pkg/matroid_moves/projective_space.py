"""GF(2) linear algebra over the points of PG(r-1,2).

Points of the rank-r binary projective geometry are the integers 1..2^r-1,
read as column vectors through their binary digits (bit i-1 of x is
coordinate i). XOR is vector addition and the parity of popcount(a & x) is
the pairing between a functional a and a point x, so cocircuits,
hyperplanes, ranks and closures all reduce to word operations.

This module provides:
- Space, GroundSet and Functional value types
- Cocircuits and hyperplanes of a functional
- Rank, closure and flat enumeration
- A small GF(2) linear solver shared by trace solving and dual bases
- Counting of affine subgeometries AG(r-3,2) inside P_r
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple, Union

import numpy as np

from matroid_moves.constants.defaults import CLOSURE_CACHE_SIZE, MAX_RANK
from matroid_moves.errors import DomainError, InternalError
from matroid_moves.utils.bits import (
    elements_of,
    iter_elements,
    mask_from_bits,
    mask_of,
    parity,
    popcount,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Space:
    """The ambient projective geometry PG(r-1,2).

    Attributes:
        r: Rank of the geometry (1 <= r <= 31)

    Examples:
        >>> Space(3).n
        7
    """

    r: int

    def __post_init__(self):
        if isinstance(self.r, bool) or not isinstance(self.r, int):
            raise DomainError(f"Rank must be an integer, got {self.r!r}")
        if not 1 <= self.r <= MAX_RANK:
            raise DomainError(f"Rank must lie in 1..{MAX_RANK}, got {self.r}")

    @property
    def n(self) -> int:
        """Number of points, 2^r - 1."""
        return (1 << self.r) - 1

    @property
    def full_mask(self) -> int:
        """Membership word of E(P_r)."""
        return (1 << self.n) - 1

    def elements(self) -> range:
        """All points 1..n."""
        return range(1, self.n + 1)

    def check_element(self, x: int) -> int:
        """Return x if it is a point of this space, else raise DomainError."""
        if isinstance(x, bool) or not isinstance(x, int) or not 1 <= x <= self.n:
            raise DomainError(f"Element {x!r} is outside 1..{self.n} for r={self.r}")
        return x

    def check_functional(self, a: "FunctionalLike") -> int:
        """Return the integer value of a functional valid for this space."""
        value = a.a if isinstance(a, Functional) else a
        if isinstance(value, bool) or not isinstance(value, int) or not 1 <= value <= self.n:
            raise DomainError(f"Functional {value!r} is outside 1..{self.n} for r={self.r}")
        return value

    def check_mask(self, mask: int) -> int:
        """Return mask if it has no bit at or above position n."""
        if isinstance(mask, bool) or not isinstance(mask, int) or mask < 0 or mask >> self.n:
            raise DomainError(f"Mask {mask!r} does not describe a subset of E(P_{self.r})")
        return mask


@dataclass(frozen=True)
class GroundSet:
    """A subset of the points of a Space, stored as a membership word.

    Read as a 2-colouring, the members are green and the rest are red.

    Attributes:
        space: The ambient geometry
        mask: Membership word, bit x-1 set iff element x is present
    """

    space: Space
    mask: int = 0

    def __post_init__(self):
        self.space.check_mask(self.mask)

    @classmethod
    def from_elements(cls, space: Space, elements: Iterable[int]) -> "GroundSet":
        """Build a ground set from 1-based elements."""
        mask = 0
        for x in elements:
            mask |= 1 << (space.check_element(x) - 1)
        return cls(space, mask)

    @classmethod
    def full(cls, space: Space) -> "GroundSet":
        return cls(space, space.full_mask)

    @classmethod
    def empty(cls, space: Space) -> "GroundSet":
        return cls(space, 0)

    def elements(self) -> List[int]:
        """Sorted list of members."""
        return elements_of(self.mask)

    def complement(self) -> "GroundSet":
        """The red set of the colouring."""
        return GroundSet(self.space, self.mask ^ self.space.full_mask)

    def is_subset(self, other: "GroundSet") -> bool:
        return self.mask & ~other.mask == 0

    def _other_mask(self, other: "GroundSet") -> int:
        if other.space != self.space:
            raise DomainError(f"Cannot combine sets from r={self.space.r} and r={other.space.r}")
        return other.mask

    def __xor__(self, other: "GroundSet") -> "GroundSet":
        return GroundSet(self.space, self.mask ^ self._other_mask(other))

    def __and__(self, other: "GroundSet") -> "GroundSet":
        return GroundSet(self.space, self.mask & self._other_mask(other))

    def __or__(self, other: "GroundSet") -> "GroundSet":
        return GroundSet(self.space, self.mask | self._other_mask(other))

    def __sub__(self, other: "GroundSet") -> "GroundSet":
        return GroundSet(self.space, self.mask & ~self._other_mask(other))

    def __len__(self) -> int:
        return popcount(self.mask)

    def __iter__(self) -> Iterator[int]:
        return iter_elements(self.mask)

    def __contains__(self, x: object) -> bool:
        return isinstance(x, int) and x >= 1 and bool(self.mask >> (x - 1) & 1)


@dataclass(frozen=True)
class Functional:
    """A nonzero GF(2) linear functional naming a cocircuit/hyperplane pair."""

    a: int

    def __post_init__(self):
        if isinstance(self.a, bool) or not isinstance(self.a, int) or self.a < 1:
            raise DomainError(f"Functional must be a positive integer, got {self.a!r}")


FunctionalLike = Union[Functional, int]
SetLike = Union[GroundSet, int]


def _as_mask(space: Space, S: SetLike) -> int:
    if isinstance(S, GroundSet):
        if S.space != space:
            raise DomainError(f"Set belongs to r={S.space.r}, expected r={space.r}")
        return S.mask
    return space.check_mask(S)


# =============================================================================
# Pairing, cocircuits and hyperplanes
# =============================================================================


def dot(a: FunctionalLike, x: int, space: Optional[Space] = None) -> int:
    """GF(2) pairing of a functional with a point.

    Args:
        a: Functional (or its integer value)
        x: Point of the geometry
        space: Optional space used to range-check both arguments

    Returns:
        1 if popcount(a & x) is odd, else 0

    Raises:
        DomainError: If x (or a) is out of range

    Examples:
        >>> dot(6, 4)
        1
        >>> dot(3, 3)
        0
    """
    if space is not None:
        value = space.check_functional(a)
        space.check_element(x)
    else:
        value = a.a if isinstance(a, Functional) else a
        if isinstance(x, bool) or not isinstance(x, int) or x < 1:
            raise DomainError(f"Element {x!r} must be a positive integer")
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise DomainError(f"Functional {value!r} must be a positive integer")
    return parity(value & x)


@lru_cache(maxsize=8192)
def cocircuit_mask(r: int, a: int) -> int:
    """Membership word of {x : a.x = 1} in P_r (no range checks)."""
    n = (1 << r) - 1
    points = np.arange(1, n + 1, dtype=np.int64) & a
    for shift in (16, 8, 4, 2, 1):
        points ^= points >> shift
    return mask_from_bits(points & 1)


def hyperplane_mask(r: int, a: int) -> int:
    """Membership word of {x != 0 : a.x = 0} in P_r (no range checks)."""
    return cocircuit_mask(r, a) ^ ((1 << ((1 << r) - 1)) - 1)


def cocircuit(space: Space, a: FunctionalLike) -> GroundSet:
    """Projective cocircuit of a functional.

    Examples:
        >>> cocircuit(Space(3), 3).elements()
        [1, 2, 5, 6]
    """
    return GroundSet(space, cocircuit_mask(space.r, space.check_functional(a)))


def hyperplane(space: Space, a: FunctionalLike) -> GroundSet:
    """Projective hyperplane of a functional, the complement of its cocircuit.

    Examples:
        >>> hyperplane(Space(3), 7).elements()
        [3, 5, 6]
    """
    return GroundSet(space, hyperplane_mask(space.r, space.check_functional(a)))


def hyperplanes_containing(space: Space, F: SetLike) -> List[int]:
    """Functionals a with a.x = 0 for every x in F, ascending.

    These are exactly the functionals whose hyperplane contains F.

    Examples:
        >>> hyperplanes_containing(Space(3), 1)
        [2, 4, 6]
    """
    mask = _as_mask(space, F)
    return [a for a in space.elements() if cocircuit_mask(space.r, a) & mask == 0]


# =============================================================================
# Rank and closure
# =============================================================================


def rank_of_mask(mask: int, limit: Optional[int] = None) -> int:
    """GF(2) rank of the points in a membership word.

    Incremental elimination keeps one pivot word per leading bit. When limit
    is given the count stops as soon as it is reached.
    """
    pivots: Dict[int, int] = {}
    rank = 0
    while mask:
        low = mask & -mask
        mask ^= low
        v = low.bit_length()
        while v:
            lead = v.bit_length()
            pivot = pivots.get(lead)
            if pivot is None:
                pivots[lead] = v
                rank += 1
                break
            v ^= pivot
        if limit is not None and rank >= limit:
            break
    return rank


def rank(space: Space, S: SetLike) -> int:
    """GF(2) rank of a set of points; rank of the empty set is 0.

    Examples:
        >>> rank(Space(3), GroundSet.from_elements(Space(3), [1, 2, 3]))
        2
    """
    return rank_of_mask(_as_mask(space, S), limit=space.r)


def basis_elements(mask: int) -> List[int]:
    """Lexicographically least basis of the points in mask (greedy, ascending)."""
    pivots: Dict[int, int] = {}
    chosen = []
    for x in iter_elements(mask):
        v = x
        while v:
            lead = v.bit_length()
            pivot = pivots.get(lead)
            if pivot is None:
                pivots[lead] = v
                chosen.append(x)
                break
            v ^= pivot
    return chosen


def basis_of(space: Space, S: SetLike) -> List[int]:
    """Lexicographically least basis contained in S."""
    return basis_elements(_as_mask(space, S))


@lru_cache(maxsize=CLOSURE_CACHE_SIZE)
def closure_mask(mask: int) -> int:
    """Membership word of span(mask) minus the zero vector."""
    span = [0]
    for b in basis_elements(mask):
        span += [v ^ b for v in span]
    out = 0
    for v in span[1:]:
        out |= 1 << (v - 1)
    return out


def closure(space: Space, S: SetLike) -> GroundSet:
    """Projective closure of S.

    Examples:
        >>> closure(Space(3), GroundSet.from_elements(Space(3), [1, 2])).elements()
        [1, 2, 3]
    """
    return GroundSet(space, closure_mask(_as_mask(space, S)))


def is_flat(space: Space, S: SetLike) -> bool:
    mask = _as_mask(space, S)
    return closure_mask(mask) == mask


def flats_of_rank(space: Space, k: int) -> List[int]:
    """All flats of rank k as membership words, ascending.

    Raises:
        DomainError: If k is outside 0..r
    """
    if not 0 <= k <= space.r:
        raise DomainError(f"Flat rank must lie in 0..{space.r}, got {k}")
    flats: Set[int] = {0}
    for _ in range(k):
        grown: Set[int] = set()
        for flat in flats:
            rest = space.full_mask & ~flat
            while rest:
                low = rest & -rest
                extended = closure_mask(flat | low)
                grown.add(extended)
                rest &= ~extended
        flats = grown
    return sorted(flats)


def standard_flat(space: Space, k: int) -> int:
    """The flat spanned by e_1..e_k, i.e. the points 1..2^k - 1."""
    if not 0 <= k <= space.r:
        raise DomainError(f"Flat rank must lie in 0..{space.r}, got {k}")
    return (1 << ((1 << k) - 1)) - 1


# =============================================================================
# Linear systems
# =============================================================================


def solve_gf2(
    rows: Sequence[int], rhs: Sequence[int], width: int
) -> Optional[Tuple[int, List[int]]]:
    """Solve row_k . a = rhs_k over GF(2) for an unknown a of `width` bits.

    Returns:
        (particular, nullspace) with every solution equal to particular XOR a
        combination of nullspace vectors, or None if the system is inconsistent.
    """
    value_mask = (1 << width) - 1
    pivots: Dict[int, int] = {}
    for row, b in zip(rows, rhs):
        v = (row & value_mask) | ((b & 1) << width)
        for bit, prow in pivots.items():
            if v >> bit & 1:
                v ^= prow
        coefficients = v & value_mask
        if not coefficients:
            if v:
                return None
            continue
        bit = coefficients.bit_length() - 1
        for other in list(pivots):
            if pivots[other] >> bit & 1:
                pivots[other] ^= v
        pivots[bit] = v

    particular = 0
    for bit, prow in pivots.items():
        if prow >> width & 1:
            particular |= 1 << bit
    nullspace = []
    for free in range(width):
        if free in pivots:
            continue
        vector = 1 << free
        for bit, prow in pivots.items():
            if prow >> free & 1:
                vector |= 1 << bit
        nullspace.append(vector)
    return particular, nullspace


def smallest_nonzero_solution(
    rows: Sequence[int], rhs: Sequence[int], width: int
) -> Optional[int]:
    """Smallest nonzero a solving the system, or None."""
    solved = solve_gf2(rows, rhs, width)
    if solved is None:
        return None
    particular, nullspace = solved
    best = None
    span = [particular]
    for vector in nullspace:
        span += [v ^ vector for v in span]
    for v in span:
        if v and (best is None or v < best):
            best = v
    return best


def standard_basis(space: Space) -> List[int]:
    return [1 << i for i in range(space.r)]


def dual_basis(space: Space, basis: Sequence[int]) -> List[int]:
    """Functionals d_i with d_i . b_j = [i == j] (the row-cocircuit functionals).

    Raises:
        DomainError: If basis is not an ordered basis of the space
    """
    if len(basis) != space.r:
        raise DomainError(f"A basis of P_{space.r} needs {space.r} elements, got {len(basis)}")
    for b in basis:
        space.check_element(b)
    if len(set(basis)) != space.r or rank_of_mask(mask_of(basis)) != space.r:
        raise DomainError(f"{list(basis)} is not a basis of P_{space.r}")
    duals = []
    for i in range(space.r):
        solved = solve_gf2(basis, [int(i == j) for j in range(space.r)], space.r)
        if solved is None or solved[1]:
            raise InternalError(f"Dual vector {i} of basis {list(basis)} is not unique")
        duals.append(solved[0])
    return duals


# =============================================================================
# Affine subgeometries
# =============================================================================


def affine_subgeometry_formula(r: int) -> int:
    """Closed form (2^r-1)(2^(r-1)-1)(2^(r-2)-1)/3 for copies of AG(r-3,2) in P_r."""
    numerator = ((1 << r) - 1) * ((1 << (r - 1)) - 1) * ((1 << (r - 2)) - 1)
    if numerator % 3:
        raise InternalError(f"Affine subgeometry count for r={r} is not integral")
    return numerator // 3


def affine_subgeometries(space: Space) -> Set[int]:
    """All copies of AG(r-3,2) in P_r as membership words.

    Each copy is a rank-(r-2) flat F minus one of its hyperplanes, i.e. the
    non-empty trace of a projective cocircuit on F.

    Raises:
        DomainError: If r < 3
    """
    if space.r < 3:
        raise DomainError(f"Affine subgeometries AG(r-3,2) need r >= 3, got {space.r}")
    copies: Set[int] = set()
    for flat in flats_of_rank(space, space.r - 2):
        for a in space.elements():
            trace = cocircuit_mask(space.r, a) & flat
            if trace:
                copies.add(trace)
    return copies


def count_affine_subgeometries(space: Space) -> int:
    """Count copies of AG(r-3,2) in P_r by enumeration.

    Examples:
        >>> count_affine_subgeometries(Space(4))
        105

    Raises:
        DomainError: If r < 3
        InternalError: If the enumeration disagrees with the closed form
    """
    count = len(affine_subgeometries(space))
    expected = affine_subgeometry_formula(space.r)
    if count != expected:
        raise InternalError(
            f"Enumerated {count} affine subgeometries in P_{space.r}, formula gives {expected}"
        )
    logger.debug(f"P_{space.r} contains {count} copies of AG({space.r - 3},2)")
    return count
