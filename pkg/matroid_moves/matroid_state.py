"""Restrictions of P_r as labeled states.

A binary matroid in this library is a subset of the points of a fixed
PG(r-1,2); two states are equal only when they are the same labeled set.
Isomorphism is the separate question of whether some element of GL(r,2)
carries one set onto the other, answered by canonical_form.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

import numpy as np

from matroid_moves.config import get_config
from matroid_moves.constants.catalogue import lookup_definition
from matroid_moves.errors import DomainError, UnsupportedError
from matroid_moves.projective_space import (
    Functional,
    GroundSet,
    SetLike,
    Space,
    _as_mask,
    cocircuit_mask,
    rank_of_mask,
    smallest_nonzero_solution,
)
from matroid_moves.utils.bits import iter_elements, mask_of

logger = logging.getLogger(__name__)

# Ranks whose full GL(r,2) image table is kept in memory
_TABLE_RANK = 4
# Rows per block when streaming GL(5,2)
_BLOCK_ROWS = 1 << 14


@dataclass(frozen=True)
class Matroid:
    """A restriction of P_r, identified with its (green) ground set.

    Attributes:
        space: The ambient geometry
        ground: Elements kept from P_r
    """

    space: Space
    ground: GroundSet

    def __post_init__(self):
        if self.ground.space != self.space:
            raise DomainError(
                f"Ground set belongs to r={self.ground.space.r}, matroid to r={self.space.r}"
            )

    @classmethod
    def from_mask(cls, space: Space, mask: int) -> "Matroid":
        return cls(space, GroundSet(space, mask))

    @classmethod
    def from_elements(cls, space: Space, elements: Iterable[int]) -> "Matroid":
        return cls(space, GroundSet.from_elements(space, elements))

    @classmethod
    def full(cls, space: Space) -> "Matroid":
        """P_r itself."""
        return cls(space, GroundSet.full(space))

    @classmethod
    def empty(cls, space: Space) -> "Matroid":
        """U_{0,0}."""
        return cls(space, GroundSet.empty(space))

    @property
    def mask(self) -> int:
        return self.ground.mask

    @property
    def r(self) -> int:
        return self.space.r

    def elements(self) -> List[int]:
        return self.ground.elements()

    def with_mask(self, mask: int) -> "Matroid":
        """Same space, different ground set."""
        return Matroid(self.space, GroundSet(self.space, mask))

    def __len__(self) -> int:
        return len(self.ground)

    def __contains__(self, x: object) -> bool:
        return x in self.ground


@dataclass(frozen=True)
class LinearMap:
    """An element of GL(r,2), stored by the images of e_1..e_r.

    Attributes:
        columns: Image of e_i at position i-1
    """

    columns: Tuple[int, ...]

    def __post_init__(self):
        r = len(self.columns)
        if r < 1:
            raise DomainError("A linear map needs at least one column")
        for c in self.columns:
            if not 1 <= c < (1 << r):
                raise DomainError(f"Column {c} is outside 1..{(1 << r) - 1}")
        if rank_of_mask(mask_of(self.columns)) != r:
            raise DomainError(f"Columns {list(self.columns)} are not invertible")

    @property
    def r(self) -> int:
        return len(self.columns)

    def apply(self, x: int) -> int:
        """Image of one point (matrix-vector product over GF(2))."""
        y = 0
        i = 0
        while x:
            if x & 1:
                y ^= self.columns[i]
            x >>= 1
            i += 1
        return y

    def apply_mask(self, mask: int) -> int:
        return mask_of(self.apply(x) for x in iter_elements(mask))

    def apply_matroid(self, M: Matroid) -> Matroid:
        if M.r != self.r:
            raise DomainError(f"Map of rank {self.r} cannot act on r={M.r}")
        return M.with_mask(self.apply_mask(M.mask))


def all_linear_maps(r: int) -> Iterator[LinearMap]:
    """Enumerate GL(r,2) in lexicographic order of column tuples.

    Examples:
        >>> sum(1 for _ in all_linear_maps(2))
        6
    """
    n = (1 << r) - 1

    def extend(columns: Tuple[int, ...], span: int) -> Iterator[Tuple[int, ...]]:
        if len(columns) == r:
            yield columns
            return
        for c in range(1, n + 1):
            if span >> (c - 1) & 1:
                continue
            grown = span | (1 << (c - 1))
            for s in iter_elements(span):
                grown |= 1 << ((s ^ c) - 1)
            yield from extend(columns + (c,), grown)

    for columns in extend((), 0):
        yield LinearMap(columns)


# =============================================================================
# Matroid invariants
# =============================================================================


def matroid_rank(M: Matroid) -> int:
    """Rank of the restriction.

    Examples:
        >>> matroid_rank(Matroid.from_elements(Space(4), [1, 2, 3]))
        2
    """
    return rank_of_mask(M.mask, limit=M.r)


def coloops(M: Matroid) -> GroundSet:
    """Elements whose deletion lowers the rank."""
    full_rank = matroid_rank(M)
    out = 0
    for x in iter_elements(M.mask):
        if rank_of_mask(M.mask ^ (1 << (x - 1)), limit=full_rank) < full_rank:
            out |= 1 << (x - 1)
    return GroundSet(M.space, out)


def trace(M: Matroid, a: int) -> int:
    """Membership word of cocircuit(a) & ground."""
    return cocircuit_mask(M.r, a) & M.mask


def find_cocircuit_with_trace(M: Matroid, D: SetLike) -> Optional[Functional]:
    """Find a projective cocircuit whose trace on M is exactly D.

    Solves a.x = [x in D] for every x in the ground set and returns the
    smallest nonzero solution.

    Args:
        M: The restriction
        D: Required trace, a subset of the ground set

    Returns:
        The smallest functional with cocircuit(a) & ground == D, or None

    Raises:
        DomainError: If D is not contained in the ground set

    Examples:
        >>> space = Space(3)
        >>> find_cocircuit_with_trace(Matroid.from_elements(space, [1, 2]), 3)
        Functional(a=3)
    """
    d = _as_mask(M.space, D)
    if d & ~M.mask:
        raise DomainError(f"Trace {d:x} is not contained in ground set {M.mask:x}")
    rows = list(iter_elements(M.mask))
    rhs = [d >> (x - 1) & 1 for x in rows]
    a = smallest_nonzero_solution(rows, rhs, M.r)
    if a is None:
        logger.debug(f"No cocircuit of P_{M.r} has trace {d:x} on {M.mask:x}")
        return None
    return Functional(a)


def named_matroid(space: Space, name: str) -> Matroid:
    """Build a catalogue matroid at its frozen embedding in P_r.

    Raises:
        DomainError: If the name is unknown or needs a larger rank
    """
    definition = lookup_definition(name)
    if definition is None:
        raise DomainError(f"Unknown matroid name {name!r}")
    if definition.rank > space.r or (definition.elements and max(definition.elements) > space.n):
        raise DomainError(
            f"{definition.name} has rank {definition.rank}, too large for P_{space.r}"
        )
    return Matroid.from_elements(space, definition.elements)


# =============================================================================
# GL(r,2) canonical forms
# =============================================================================


def _point_images(columns: np.ndarray) -> np.ndarray:
    """Images of all points under each map, as bit positions (image - 1).

    Args:
        columns: Array of shape (m, r) holding the images of e_1..e_r
    """
    m, r = columns.shape
    n = (1 << r) - 1
    images = np.zeros((m, n + 1), dtype=np.int64)
    for x in range(1, n + 1):
        low = (x & -x).bit_length() - 1
        images[:, x] = images[:, x & (x - 1)] ^ columns[:, low]
    return images[:, 1:] - 1


def _column_blocks(r: int, block_rows: int = _BLOCK_ROWS) -> Iterator[np.ndarray]:
    """Stream GL(r,2) as blocks of column arrays of shape (m, r)."""
    n = (1 << r) - 1
    partial = np.zeros((1, 0), dtype=np.int64)
    for _ in range(r - 1):
        partial = _extend_columns(partial, n)
    for start in range(0, len(partial), block_rows):
        yield _extend_columns(partial[start : start + block_rows], n)


def _extend_columns(partial: np.ndarray, n: int) -> np.ndarray:
    """Append every column outside the span of each row's columns."""
    m, k = partial.shape
    used = np.zeros((m, n + 1), dtype=bool)
    span = np.zeros((m, 1 << k), dtype=np.int64)
    for x in range(1, 1 << k):
        low = (x & -x).bit_length() - 1
        span[:, x] = span[:, x & (x - 1)] ^ partial[:, low]
    np.put_along_axis(used, span, True, axis=1)
    rows, cols = np.nonzero(~used[:, 1:])
    return np.hstack([partial[rows], (cols + 1)[:, None]])


@lru_cache(maxsize=None)
def _image_table(r: int) -> np.ndarray:
    """Bit positions of every point under every map of GL(r,2), r <= 4."""
    table = np.vstack([_point_images(block) for block in _column_blocks(r)])
    logger.debug(f"Built GL({r},2) image table with {len(table)} maps")
    return table


def _images_of(table: np.ndarray, mask: int) -> np.ndarray:
    """Membership words of the images of mask under every row of table."""
    positions = [x - 1 for x in iter_elements(mask)]
    if not positions:
        return np.zeros(len(table), dtype=np.int64)
    return np.bitwise_or.reduce(np.left_shift(1, table[:, positions]), axis=1)


def _check_canonical_rank(space: Space) -> None:
    limit = get_config().max_canonical_rank
    if space.r > limit:
        raise UnsupportedError(
            f"canonical_form supports r <= {limit}, got r={space.r}"
        )


def canonical_mask(space: Space, mask: int) -> int:
    """Smallest membership word in the GL(r,2) orbit of mask."""
    _check_canonical_rank(space)
    space.check_mask(mask)
    if mask in (0, space.full_mask):
        return mask
    if space.r <= _TABLE_RANK:
        return int(_images_of(_image_table(space.r), mask).min())
    best = mask
    for block in _column_blocks(space.r):
        best = min(best, int(_images_of(_point_images(block), mask).min()))
    return best


def canonical_form(M: Matroid) -> GroundSet:
    """Canonical representative of the isomorphism class of M.

    Raises:
        UnsupportedError: If r exceeds the configured max_canonical_rank

    Examples:
        >>> canonical_form(Matroid.from_elements(Space(2), [2, 3])).mask
        3
    """
    return GroundSet(M.space, canonical_mask(M.space, M.mask))


def are_isomorphic(M1: Matroid, M2: Matroid) -> bool:
    """True if some map of GL(r,2) carries one ground set onto the other."""
    if M1.space != M2.space:
        raise DomainError(f"Cannot compare r={M1.r} with r={M2.r}")
    if len(M1) != len(M2) or matroid_rank(M1) != matroid_rank(M2):
        return False
    if M1.mask == M2.mask:
        return True
    return canonical_mask(M1.space, M1.mask) == canonical_mask(M2.space, M2.mask)


def orbit_under_gl(space: Space, mask: int) -> List[int]:
    """All distinct images of mask under GL(r,2), ascending (r <= 4)."""
    if space.r > _TABLE_RANK:
        raise UnsupportedError(f"Orbit listing supports r <= {_TABLE_RANK}, got r={space.r}")
    space.check_mask(mask)
    return sorted(int(v) for v in np.unique(_images_of(_image_table(space.r), mask)))


@lru_cache(maxsize=None)
def _canonical_array(r: int) -> np.ndarray:
    space = Space(r)
    total = 1 << space.n
    canon = np.full(total, -1, dtype=np.int64)
    table = _image_table(r)
    classes = 0
    for mask in range(total):
        if canon[mask] >= 0:
            continue
        canon[_images_of(table, mask)] = mask
        classes += 1
    logger.info(f"P_{r} has {classes} canonical classes over {total} states")
    return canon


def canonical_classes(space: Space) -> np.ndarray:
    """Canonical representative of every mask, indexed by mask (r <= 4).

    Masks are visited in ascending order, so the first unseen mask of each
    orbit is its smallest member.
    """
    if space.r > _TABLE_RANK:
        raise UnsupportedError(
            f"canonical_classes supports r <= {_TABLE_RANK}, got r={space.r}"
        )
    return _canonical_array(space.r)


def class_sizes(space: Space) -> Dict[int, int]:
    """Number of labeled states in each canonical class (r <= 4)."""
    values, counts = np.unique(canonical_classes(space), return_counts=True)
    return {int(v): int(c) for v, c in zip(values, counts)}

