"""The four operations on restrictions of P_r and their algebra.

Complementation (omega), switching (sigma), local complementation (lambda)
and pointed swaps are all symmetric differences with sets computed from the
current state, so every one of them is an involution. Hyperplane
complementation is the composite omega sigma_a and is kept as its own move
because the swap synthesizers are phrased in terms of it.

The *_mask kernels work on raw membership words and do no range checks;
they are what the orbit engine runs in its inner loop. The Matroid-level
functions validate their arguments and delegate to the kernels.
"""

import logging
from typing import List, Sequence, Tuple

from matroid_moves.errors import DomainError, InternalError, ReplayError
from matroid_moves.matroid_state import Matroid, find_cocircuit_with_trace
from matroid_moves.models.moves import Move, MoveKind, MoveSequence, SwapKind, TrajectoryStep
from matroid_moves.projective_space import (
    FunctionalLike,
    SetLike,
    Space,
    _as_mask,
    closure_mask,
    cocircuit_mask,
    dot,
    dual_basis,
    hyperplane_mask,
    hyperplanes_containing,
    is_flat,
    rank_of_mask,
)

logger = logging.getLogger(__name__)


# =============================================================================
# Mask kernels
# =============================================================================


def omega_mask(r: int, mask: int) -> int:
    return mask ^ ((1 << ((1 << r) - 1)) - 1)


def sigma_mask(r: int, mask: int, a: int) -> int:
    return mask ^ cocircuit_mask(r, a)


def lambda_mask(r: int, mask: int, a: int) -> int:
    """M xor (cl(M & C*) - C*); the identity when the trace is empty."""
    coc = cocircuit_mask(r, a)
    trace = mask & coc
    if not trace:
        return mask
    return mask ^ (closure_mask(trace) & ~coc)


def hypcomp_mask(r: int, mask: int, a: int) -> int:
    return mask ^ hyperplane_mask(r, a)


def swap_mask(mask: int, f: int) -> int:
    """Translate every element other than f by f; f keeps its colour."""
    pivot = 1 << (f - 1)
    out = mask & pivot
    rest = mask & ~pivot
    while rest:
        low = rest & -rest
        rest ^= low
        out |= 1 << ((low.bit_length() ^ f) - 1)
    return out


def step_mask(r: int, mask: int, move: Move) -> int:
    """Apply one move to a membership word without colour checks."""
    kind = move.kind
    if kind is MoveKind.OMEGA:
        return omega_mask(r, mask)
    if kind is MoveKind.SIGMA:
        return sigma_mask(r, mask, move.param)
    if kind is MoveKind.LAMBDA:
        return lambda_mask(r, mask, move.param)
    if kind is MoveKind.HYPCOMP:
        return hypcomp_mask(r, mask, move.param)
    return swap_mask(mask, move.param)


# =============================================================================
# Operations on matroids
# =============================================================================


def apply_omega(M: Matroid) -> Matroid:
    """Complement the ground set in E(P_r).

    Examples:
        >>> apply_omega(Matroid.full(Space(3))).mask
        0
    """
    return M.with_mask(omega_mask(M.r, M.mask))


def apply_sigma(M: Matroid, a: FunctionalLike) -> Matroid:
    """Symmetric difference with the cocircuit of a."""
    return M.with_mask(sigma_mask(M.r, M.mask, M.space.check_functional(a)))


def apply_lambda(M: Matroid, a: FunctionalLike) -> Matroid:
    """Local complementation at the cocircuit of a.

    Examples:
        >>> apply_lambda(Matroid.full(Space(2)), 1).elements()
        [1, 3]
    """
    return M.with_mask(lambda_mask(M.r, M.mask, M.space.check_functional(a)))


def apply_hyperplane_complement(M: Matroid, a: FunctionalLike) -> Matroid:
    """Symmetric difference with the hyperplane of a, i.e. omega(sigma_a(M))."""
    return M.with_mask(hypcomp_mask(M.r, M.mask, M.space.check_functional(a)))


def apply_pointed_swap(M: Matroid, f: int) -> Tuple[Matroid, SwapKind]:
    """Pointed swap at f, dispatching on the colour of f.

    Examples:
        >>> result, kind = apply_pointed_swap(Matroid.from_elements(Space(2), [1, 2]), 1)
        >>> result.elements(), kind.value
        ([1, 3], 'on')
    """
    M.space.check_element(f)
    kind = SwapKind.ON if f in M.ground else SwapKind.OFF
    return M.with_mask(swap_mask(M.mask, f)), kind


def apply_pointed_swap_by_lines(M: Matroid, f: int) -> Matroid:
    """Pointed swap computed line by line from the colouring.

    On every line {f, y, y ^ f} the colours of y and y ^ f are exchanged when
    they differ.
    """
    M.space.check_element(f)
    mask = M.mask
    seen = 1 << (f - 1)
    for y in M.space.elements():
        if seen >> (y - 1) & 1:
            continue
        z = y ^ f
        seen |= (1 << (y - 1)) | (1 << (z - 1))
        y_green = mask >> (y - 1) & 1
        z_green = mask >> (z - 1) & 1
        if y_green != z_green:
            mask ^= (1 << (y - 1)) | (1 << (z - 1))
    return M.with_mask(mask)


def _check_move(space: Space, move: Move) -> None:
    if move.kind is MoveKind.OMEGA:
        return
    if move.is_swap:
        space.check_element(move.param)
    else:
        space.check_functional(move.param)


def apply_move(M: Matroid, move: Move) -> Matroid:
    """Apply one move, enforcing the colour precondition of swaps.

    Raises:
        DomainError: If the parameter is out of range or a swap's pivot has
            the wrong colour
    """
    _check_move(M.space, move)
    if move.kind is MoveKind.SWAP_ON and move.param not in M.ground:
        raise DomainError(f"swap+ needs a green pivot, {move.param} is red")
    if move.kind is MoveKind.SWAP_OFF and move.param in M.ground:
        raise DomainError(f"swap- needs a red pivot, {move.param} is green")
    return M.with_mask(step_mask(M.r, M.mask, move))


def swap_move(M: Matroid, f: int) -> Move:
    """The pointed-swap move at f for the current colour of f."""
    return Move.swap_on(f) if f in M.ground else Move.swap_off(f)


# =============================================================================
# Replay
# =============================================================================


def replay_with_trajectory(
    space: Space, start: Matroid, seq: MoveSequence
) -> Tuple[Matroid, List[TrajectoryStep]]:
    """Replay a sequence left to right, recording every intermediate state.

    Raises:
        ReplayError: If a move is out of range or a swap's colour
            precondition fails; the error names the move index
    """
    if start.space != space:
        raise DomainError(f"Start state has r={start.r}, expected r={space.r}")
    state = start
    steps = []
    for index, move in enumerate(seq.moves):
        try:
            after = apply_move(state, move)
        except DomainError as e:
            raise ReplayError(
                f"Move {index} ({move.to_text()}) cannot be applied: {e}",
                index=index,
                move=move.to_text(),
            ) from e
        no_op = move.kind is MoveKind.LAMBDA and not (
            state.mask & cocircuit_mask(space.r, move.param)
        )
        if no_op:
            logger.warning(f"Move {index} ({move.to_text()}) has an empty trace")
        steps.append(TrajectoryStep(index=index, move=move, mask=after.mask, no_op=no_op))
        state = after
    return state, steps


def replay(space: Space, start: Matroid, seq: MoveSequence) -> Matroid:
    """Replay a sequence and return the final state.

    Examples:
        >>> space = Space(2)
        >>> seq = MoveSequence(moves=[Move.hypcomp(1), Move.hypcomp(2), Move.hypcomp(3)])
        >>> replay(space, Matroid.full(space), seq).mask
        0
    """
    state, _ = replay_with_trajectory(space, start, seq)
    return state


def trajectory_masks(space: Space, start: Matroid, seq: MoveSequence) -> List[int]:
    """Start mask followed by the mask after each move."""
    _, steps = replay_with_trajectory(space, start, seq)
    return [start.mask] + [step.mask for step in steps]


# =============================================================================
# Word algebra
# =============================================================================


def normalize_sigma_omega(seq: MoveSequence) -> MoveSequence:
    """Reduce a word in omega and sigma to one of i, omega, sigma_a, omega sigma_a.

    Switchings commute with each other and with omega, and
    sigma_a sigma_b = sigma_(a xor b), so the word collapses to the parity
    of its omegas and the XOR of its functionals.

    Raises:
        DomainError: If the word contains any other move

    Examples:
        >>> normalize_sigma_omega(MoveSequence(moves=[Move.sigma(1), Move.sigma(2)])).to_text()
        'sigma a=3\\n'
    """
    a = 0
    omegas = 0
    for move in seq.moves:
        if move.kind is MoveKind.OMEGA:
            omegas += 1
        elif move.kind is MoveKind.SIGMA:
            a ^= move.param
        else:
            raise DomainError(f"{move.to_text()} is not a switching or complementation")
    moves = []
    if a:
        moves.append(Move.sigma(a))
    if omegas % 2:
        moves.append(Move.omega())
    return MoveSequence(moves=moves)


def decompose_into_row_switchings(
    space: Space, a: FunctionalLike, basis: Sequence[int]
) -> MoveSequence:
    """Write sigma_a as switchings on the row cocircuits of a basis.

    The row cocircuit functionals are the dual basis d_1..d_r, and
    a = xor of d_i over the i with a.b_i = 1.

    Raises:
        DomainError: If basis is not an ordered basis of the space

    Examples:
        >>> decompose_into_row_switchings(Space(3), 6, [1, 2, 4]).to_text()
        'sigma a=2\\nsigma a=4\\n'
    """
    value = space.check_functional(a)
    duals = dual_basis(space, basis)
    return MoveSequence(
        moves=[Move.sigma(d) for b, d in zip(basis, duals) if dot(value, b)]
    )


def omega_as_three_hyperplanes(space: Space, F: SetLike) -> MoveSequence:
    """Complementation as three hyperplane complements around a flat.

    The three hyperplanes containing a rank-(r-2) flat F pairwise meet in F
    and each point outside F lies in exactly one of them, so their
    symmetric difference is E(P_r).

    Raises:
        DomainError: If r < 2 or F is not a flat of rank r-2
    """
    if space.r < 2:
        raise DomainError("Complementation by hyperplanes needs r >= 2")
    mask = _as_mask(space, F)
    if not is_flat(space, mask) or rank_of_mask(mask) != space.r - 2:
        raise DomainError(f"{mask:x} is not a flat of rank {space.r - 2} in P_{space.r}")
    functionals = hyperplanes_containing(space, mask)
    return MoveSequence(moves=[Move.hypcomp(a) for a in functionals])


def omega_via_sigma_lambda(M: Matroid) -> MoveSequence:
    """Complementation using one switching and one local complementation.

    If M is not spanning, a cocircuit a missing M gives omega = lambda_a sigma_a;
    otherwise a cocircuit whose trace spans gives omega = sigma_a lambda_a.
    """
    r = M.r
    full_rank = rank_of_mask(M.mask, limit=r) == r
    for a in M.space.elements():
        coc = cocircuit_mask(r, a)
        if not full_rank and not coc & M.mask:
            return MoveSequence(moves=[Move.sigma(a), Move.lam(a)])
        if full_rank and rank_of_mask(coc & M.mask, limit=r) == r:
            return MoveSequence(moves=[Move.lam(a), Move.sigma(a)])
    raise InternalError(f"No suitable cocircuit for {M.mask:x}")


def lambda_for_trace(M: Matroid, D: SetLike) -> Move:
    """Local complementation at a cocircuit with prescribed trace D.

    Raises:
        DomainError: If no projective cocircuit meets M exactly in D
    """
    a = find_cocircuit_with_trace(M, D)
    if a is None:
        raise DomainError(f"No cocircuit of P_{M.r} has trace {_as_mask(M.space, D):x}")
    return Move.lam(a.a)

