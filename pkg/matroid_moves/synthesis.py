"""Constructive move-sequence synthesis from P_r to a labeled target.

Every synthesizer builds its script on raw masks, then replays the result
from P_r with full colour validation before returning it. Since every move
is an involution and a pointed swap never changes the colour of its pivot,
a script from A to B reversed is a valid script from B to A; the
synthesizers lean on this to run constructions backwards from the target.

Move alphabets:
    synth_full              pointed swaps and hyperplane complements
    synth_single_swap_kind  swaps of one kind and hyperplane complements
    synth_lambda_swap       local complementations and pointed swaps
    synth_r4_walkthrough    complementation, switching, local complementation
"""

import logging
from typing import List, Optional, Sequence, Tuple, Union

from matroid_moves.errors import DomainError, InternalError, UnsupportedError
from matroid_moves.formats import format_hex, format_sequence
from matroid_moves.matroid_state import (
    Matroid,
    canonical_classes,
    coloops,
    find_cocircuit_with_trace,
    named_matroid,
)
from matroid_moves.models.moves import Move, MoveKind, MoveSequence, SwapKind
from matroid_moves.models.synthesis import SynthesisResult
from matroid_moves.moves import (
    omega_as_three_hyperplanes,
    step_mask,
    swap_mask,
    trajectory_masks,
)
from matroid_moves.orbit_engine import GeneratorSet, orbit, reachable
from matroid_moves.projective_space import (
    SetLike,
    Space,
    _as_mask,
    cocircuit_mask,
    hyperplane_mask,
    standard_basis,
    standard_flat,
)
from matroid_moves.utils.bits import iter_elements, lowest_element, mask_of, parity, popcount

logger = logging.getLogger(__name__)

# Named classes reached from P_4 by the rank-4 walkthrough, in order
WALKTHROUGH_TARGETS = (
    "P_3",
    "U_{3,4}",
    "M(K_4\\e)",
    "U_{3,3}",
    "M(K_4)",
    "U_{4,4}",
    "F_7^*",
    "U_{4,5}",
)


class _Script:
    """A move list together with the state it has reached."""

    def __init__(self, space: Space, mask: int):
        self.space = space
        self.mask = mask
        self.moves: List[Move] = []

    def push(self, move: Move) -> None:
        self.mask = step_mask(self.space.r, self.mask, move)
        self.moves.append(move)

    def extend(self, moves: Sequence[Move]) -> None:
        for move in moves:
            self.push(move)

    def exchange(self, e: int, f: int) -> None:
        """Make red e green and green f red."""
        self.extend(_exchange_moves(e, f))

    def same_size(self, target: int) -> None:
        self.extend(_same_size_moves(self.mask, target))


def _exchange_moves(e: int, f: int) -> List[Move]:
    return [Move.swap_off(e), Move.swap_on(f ^ e), Move.swap_off(f)]


def _same_size_moves(mask: int, target: int) -> List[Move]:
    moves = []
    for f, e in zip(iter_elements(mask & ~target), iter_elements(target & ~mask)):
        moves += _exchange_moves(e, f)
    return moves


def _smallest(mask: int, k: int) -> int:
    """Membership word of the k smallest elements of mask."""
    out = 0
    for x in iter_elements(mask):
        if k == 0:
            break
        out |= 1 << (x - 1)
        k -= 1
    return out


def _omega_moves(space: Space) -> List[Move]:
    """Complementation as three hyperplane complements around e_1..e_(r-2)."""
    return omega_as_three_hyperplanes(space, standard_flat(space, space.r - 2)).moves


def _result(
    space: Space, target: int, moves: List[Move], method: str, label: str = ""
) -> SynthesisResult:
    """Replay moves from P_r and package them.

    Raises:
        InternalError: If the replay does not land on target
    """
    seq = MoveSequence(moves=moves)
    trajectory = trajectory_masks(space, Matroid.full(space), seq)
    if trajectory[-1] != target:
        raise InternalError(
            f"{method} produced a script ending at {trajectory[-1]:x}, expected {target:x}"
        )
    logger.info(f"{method}: {len(seq)} moves to {target:x} in P_{space.r}")
    return SynthesisResult(
        r=space.r, target=target, seq=seq, trajectory=trajectory, method=method, label=label
    )


# =============================================================================
# Pointed-swap exchanges
# =============================================================================


def synth_swap_exchange(M: Matroid, e: int, f: int) -> MoveSequence:
    """Three pointed swaps exchanging the colours of red e and green f.

    Swapping at e translates the green set by e, swapping at f ^ e moves it
    to translation by f with f ^ e green, and swapping at f translates back
    with e and f exchanged.

    Raises:
        DomainError: If e is green or f is red

    Examples:
        >>> M = Matroid.from_elements(Space(2), [1, 2])
        >>> synth_swap_exchange(M, 3, 2).to_text()
        'swap- f=3\\nswap+ f=1\\nswap- f=2\\n'
    """
    M.space.check_element(e)
    M.space.check_element(f)
    if e in M.ground:
        raise DomainError(f"Element {e} must be red to be exchanged in")
    if f not in M.ground:
        raise DomainError(f"Element {f} must be green to be exchanged out")
    return MoveSequence(moves=_exchange_moves(e, f))


def synth_same_size(M: Matroid, target: SetLike) -> MoveSequence:
    """Pointed swaps taking M to an equal-size target.

    Elements of ground - target are paired with those of target - ground in
    ascending order, one three-swap exchange per pair.

    Raises:
        DomainError: If the sizes differ
    """
    goal = _as_mask(M.space, target)
    if popcount(goal) != popcount(M.mask):
        raise DomainError(
            f"Target has {popcount(goal)} elements, state has {popcount(M.mask)}"
        )
    return MoveSequence(moves=_same_size_moves(M.mask, goal))


def single_swap_exchanges(M: Matroid, x: int, y: int) -> List[int]:
    """Pivots f whose single pointed swap exchanges exactly green x and red y."""
    M.space.check_element(x)
    M.space.check_element(y)
    if x not in M.ground or y in M.ground:
        raise DomainError(f"Need x={x} green and y={y} red")
    goal = M.mask ^ (1 << (x - 1)) ^ (1 << (y - 1))
    return [f for f in M.space.elements() if swap_mask(M.mask, f) == goal]


# =============================================================================
# Swaps and hyperplane complements
# =============================================================================


def _smallest_functional(space: Space, *points: int) -> int:
    """Smallest a with a.x = 1 for every given point."""
    for a in space.elements():
        if all(parity(a & x) for x in points):
            return a
    raise InternalError(f"No functional is odd on {points}")


def _reduce_to_small(space: Space, target: int) -> _Script:
    """Shrink target to at most one green element with swaps and hyperplane complements.

    Each round takes the two smallest greens x, y and a cocircuit through both.
    If the complementary hyperplane H has no red element, complementing
    inside H removes its points. Otherwise, with z the smallest red point of
    H: exchange z and x, complement, complement inside H, exchange y and z,
    complement inside H, complement. The net effect removes x and y.
    """
    r = space.r
    script = _Script(space, target)
    omega = _omega_moves(space)
    rounds = 0
    while popcount(script.mask) > 1:
        rounds += 1
        if rounds > space.n:
            raise InternalError(f"Reduction of {target:x} did not terminate")
        greens = iter_elements(script.mask)
        x, y = next(greens), next(greens)
        a = _smallest_functional(space, x, y)
        reds_in_h = hyperplane_mask(r, a) & ~script.mask
        if not reds_in_h:
            logger.debug(f"Round {rounds}: hyperplane of {a} is all green")
            script.push(Move.hypcomp(a))
            continue
        z = lowest_element(reds_in_h)
        logger.debug(f"Round {rounds}: removing {x}, {y} via a={a}, z={z}")
        script.exchange(z, x)
        script.extend(omega)
        script.push(Move.hypcomp(a))
        script.exchange(y, z)
        script.push(Move.hypcomp(a))
        script.extend(omega)
    return script


def _bootstrap(space: Space, small: int) -> List[Move]:
    """Moves from P_r to a state with at most one element.

    The empty set is omega(P_r). A single point g is reached through the
    cocircuit of b (a copy of A_r), the hyperplane of b plus g, and a final
    complement inside the hyperplane.
    """
    if small == 0:
        return _omega_moves(space)
    g = lowest_element(small)
    b = _smallest_functional(space, g)
    script = _Script(space, space.full_mask)
    script.push(Move.hypcomp(b))
    script.same_size(hyperplane_mask(space.r, b) | (1 << (g - 1)))
    script.push(Move.hypcomp(b))
    return script.moves


def synth_full(space: Space, target: SetLike) -> SynthesisResult:
    """Pointed swaps and hyperplane complements taking P_r to target.

    Raises:
        UnsupportedError: If r = 1 and the target is empty
    """
    goal = _as_mask(space, target)
    if goal == space.full_mask:
        return _result(space, goal, [], "synth_full")
    if space.r == 1:
        raise UnsupportedError("P_1 cannot be emptied by swaps and hyperplane complements")
    chain = _reduce_to_small(space, goal)
    moves = _bootstrap(space, chain.mask) + list(reversed(chain.moves))
    return _result(space, goal, moves, "synth_full")


def synth_single_swap_kind(
    space: Space, target: SetLike, kind: Union[SwapKind, str]
) -> SynthesisResult:
    """Like synth_full, but with pointed swaps of one kind only.

    A swap of the other kind at u is conjugated by complementation, which
    flips the colour of u, and each complementation becomes three hyperplane
    complements.
    """
    kind = SwapKind(kind)
    base = synth_full(space, target)
    if not base.seq.moves:
        return _result(space, base.target, [], f"synth_single_swap_kind[{kind.value}]")
    forbidden = MoveKind.SWAP_OFF if kind is SwapKind.ON else MoveKind.SWAP_ON
    omega = _omega_moves(space)
    moves: List[Move] = []
    for move in base.seq.moves:
        if move.kind is not forbidden:
            moves.append(move)
            continue
        allowed = Move.swap_on(move.param) if kind is SwapKind.ON else Move.swap_off(move.param)
        moves += omega + [allowed] + omega
    return _result(space, base.target, moves, f"synth_single_swap_kind[{kind.value}]")


# =============================================================================
# Local complementation and swaps
# =============================================================================


def grow_by_coloop(M: Matroid) -> Tuple[Move, Matroid]:
    """Add the third point of the line through two coloops.

    With e, f the two smallest coloops, a cocircuit meeting M exactly in
    {e, f} exists and local complementation there adds e ^ f.

    Returns:
        (Lambda move, grown matroid)

    Raises:
        DomainError: If M has fewer than two coloops
    """
    loops_free = list(coloops(M))
    if len(loops_free) < 2:
        raise DomainError(f"{M.mask:x} has {len(loops_free)} coloops, need two")
    e, f = loops_free[0], loops_free[1]
    a = find_cocircuit_with_trace(M, mask_of([e, f]))
    if a is None:
        raise InternalError(f"No cocircuit meets {M.mask:x} in coloops {e}, {f}")
    move = Move.lam(a.a)
    grown = M.with_mask(step_mask(M.r, M.mask, move))
    if grown.mask != M.mask | (1 << ((e ^ f) - 1)):
        raise InternalError(f"Local complementation at {a.a} did not add {e ^ f}")
    return move, grown


def coloop_pair_seed(space: Space, k: int) -> Matroid:
    """A k-element restriction with two coloops.

    The k-2 smallest points of the flat spanned by e_1..e_(r-2), plus
    e_(r-1) and e_r.

    Raises:
        DomainError: If r < 3 or k is outside 2..2^(r-2)+1
    """
    if space.r < 3:
        raise DomainError(f"Coloop seeds need r >= 3, got r={space.r}")
    top = (1 << (space.r - 2)) + 1
    if not 2 <= k <= top:
        raise DomainError(f"Seed size must lie in 2..{top}, got {k}")
    flat = standard_flat(space, space.r - 2)
    mask = _smallest(flat, k - 2)
    mask |= (1 << ((1 << (space.r - 2)) - 1)) | (1 << ((1 << (space.r - 1)) - 1))
    return Matroid.from_mask(space, mask)


class _LambdaRoutes:
    """Constructions around the working cocircuit C* = cocircuit(2^r - 1)."""

    def __init__(self, space: Space):
        self.space = space
        self.c = space.n
        self.coc = cocircuit_mask(space.r, self.c)
        self.hyp = hyperplane_mask(space.r, self.c)
        self.basis = mask_of(standard_basis(space))

    def odd(self, t: int) -> _Script:
        """P_r to an odd size t >= 2r-1: lambda, 2k exchanges, lambda."""
        k = (self.space.n - t) // 2
        inside = _smallest(self.coc & ~self.basis, k)
        outside = _smallest(self.hyp, k)
        script = _Script(self.space, self.space.full_mask)
        script.push(Move.lam(self.c))
        script.same_size((self.coc & ~inside) | outside)
        script.push(Move.lam(self.c))
        return script

    def even(self, t: int) -> _Script:
        """P_r to an even size t >= 2r via a state inside C* minus one point."""
        script = self.odd((1 << (self.space.r - 1)) - 1)
        e = lowest_element(self.coc & ~self.basis)
        k = (self.space.n - 1 - t) // 2
        rest = self.coc & ~self.basis & ~(1 << (e - 1))
        inside = _smallest(rest, k)
        outside = _smallest(self.hyp, k)
        script.same_size((self.coc & ~(1 << (e - 1)) & ~inside) | outside)
        script.push(Move.lam(self.c))
        return script

    def small(self, t: int) -> _Script:
        """P_r to a size 2 <= t <= 2^(r-2)+2 through the coloop chain.

        The chain runs forward from a two-coloop pair, growing by one point
        and re-seeding until it reaches size 2^(r-2)+2; packing that state
        into C* and applying lambda gives a bridge state reachable from P_r.
        The script goes P_r -> bridge -> chain end and then down the chain.
        """
        space = self.space
        top = (1 << (space.r - 2)) + 1
        chain = _Script(space, coloop_pair_seed(space, 2).mask)
        for k in range(2, top + 1):
            if k > 2:
                chain.same_size(coloop_pair_seed(space, k).mask)
            move, _ = grow_by_coloop(Matroid.from_mask(space, chain.mask))
            chain.push(move)
        end = chain.mask

        packed = self.basis | _smallest(self.coc & ~self.basis, popcount(end) - popcount(self.basis))
        bridge = packed | self.hyp
        script = self.odd(popcount(bridge))
        script.same_size(bridge)
        script.push(Move.lam(self.c))
        script.same_size(end)

        for move in reversed(chain.moves):
            if popcount(script.mask) == t:
                break
            script.push(move)
        if popcount(script.mask) != t:
            raise InternalError(f"Coloop chain never passes size {t}")
        return script


def synth_lambda_swap(space: Space, target: SetLike) -> SynthesisResult:
    """Local complementations and pointed swaps taking P_r to target.

    Ranks up to 3 are searched directly. From rank 4 on, odd sizes from
    2r-1 and even sizes from 2r use the working cocircuit; sizes up to
    2^(r-2)+2 use the coloop chain. Every route ends with same-size swaps
    onto the labeled target.

    Raises:
        DomainError: If the target has fewer than two elements
    """
    goal = _as_mask(space, target)
    method = "synth_lambda_swap"
    if goal == space.full_mask:
        return _result(space, goal, [], method)
    t = popcount(goal)
    if t < 2:
        raise DomainError(
            f"Targets with {t} elements (U_{{0,0}} or U_{{1,1}}) are not reachable "
            "by local complementation and pointed swaps"
        )

    if space.r <= 3:
        gens = GeneratorSet(lam=True, swap_on=True, swap_off=True)
        seq = reachable(space, Matroid.full(space), Matroid.from_mask(space, goal), gens)
        if seq is None:
            raise InternalError(f"{goal:x} is not reachable in P_{space.r}")
        return _result(space, goal, list(seq.moves), method)

    routes = _LambdaRoutes(space)
    if t <= (1 << (space.r - 2)) + 2:
        script = routes.small(t)
    elif t % 2:
        script = routes.odd(t)
    else:
        script = routes.even(t)
    script.same_size(goal)
    return _result(space, goal, script.moves, method)


# =============================================================================
# Rank-4 walkthrough
# =============================================================================


def synth_r4_walkthrough(space: Space) -> List[SynthesisResult]:
    """Complementation, switching and local complementation scripts from P_4.

    One breadth-first orbit of P_4 supplies, for each named class, the
    first-discovered state of that class and its shortest script. F_7^* is
    reached as the complement of a copy of F_7 + U_{1,1}.

    Raises:
        DomainError: If r != 4
    """
    if space.r != 4:
        raise DomainError(f"The walkthrough runs in P_4, got r={space.r}")
    canon = canonical_classes(space)
    table = orbit(space, Matroid.full(space), GeneratorSet(omega=True, sigma=True, lam=True))

    def first_in_class(representative: int) -> int:
        wanted = canon[representative]
        for state in table.parents:
            if canon[state] == wanted:
                return state
        raise InternalError(f"No state of class {wanted:x} in the orbit of P_4")

    results = []
    for name in WALKTHROUGH_TARGETS:
        if name == "F_7^*":
            via = named_matroid(space, "F_7+U_{1,1}").mask
            moves = list(table.extract(first_in_class(via)).moves) + [Move.omega()]
        else:
            moves = list(table.extract(first_in_class(named_matroid(space, name).mask)).moves)
        end = trajectory_masks(
            space, Matroid.full(space), MoveSequence(moves=moves)
        )[-1]
        if canon[end] != canon[named_matroid(space, name).mask]:
            raise InternalError(f"Walkthrough script for {name} ends outside its class")
        results.append(_result(space, end, moves, "synth_r4_walkthrough", label=name))
    return results


def export_result(result: SynthesisResult) -> str:
    """Sequence file for a result, with its trajectory as trailing comments."""
    trailer = [
        f"trajectory i={i} mask={format_hex(mask)}" for i, mask in enumerate(result.trajectory)
    ]
    headers = {"method": result.method}
    if result.label:
        headers["label"] = result.label
    return format_sequence(
        result.seq,
        r=result.r,
        start=(1 << ((1 << result.r) - 1)) - 1,
        target=result.target,
        headers=headers,
        trailer=trailer,
    )


def result_for(
    space: Space, target: SetLike, method: str = "full", kind: Optional[str] = None
) -> SynthesisResult:
    """Dispatch to a synthesizer by name ('full', 'single', 'lambda')."""
    if method == "full":
        return synth_full(space, target)
    if method == "single":
        return synth_single_swap_kind(space, target, kind or SwapKind.ON)
    if method == "lambda":
        return synth_lambda_swap(space, target)
    raise DomainError(f"Unknown synthesis method {method!r}")
