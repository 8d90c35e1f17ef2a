"""Command-line front end for matroid move computations.

Usage:
    matroid-moves orbit --r 3 --start full --gens sigma,omega
    matroid-moves reach --r 4 --start full --target elements=1,2 --gens lambda,swap
    matroid-moves synth --r 4 --target elements=1,2 --gens lambda,swap --out seq.txt
    matroid-moves replay seq.txt
    matroid-moves check-props --r 8 --seed 1 --find-witness
    matroid-moves certify --r 8 --seed 1 --find-witness --out cert.txt
    matroid-moves certify --verify cert.txt
    matroid-moves count --r-min 3 --r-max 12
    matroid-moves canon --r 4 --state named:F_7

Reports go to stdout, logs to stderr. Exit codes: 0 on success, 1 when a
verification fails, 2 on usage errors.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Dict, FrozenSet, List, Optional, Tuple

import pandas as pd

from matroid_moves import __version__
from matroid_moves.config import MovesConfig, get_config, set_config
from matroid_moves.constants.defaults import (
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFICATION_FAILED,
    WITNESS_RANK,
)
from matroid_moves.errors import (
    BudgetExhaustedError,
    CertificateRefused,
    ConfigError,
    DomainError,
    FormatError,
    IndeterminateError,
    ReplayError,
    UnsupportedError,
)
from matroid_moves.formats import (
    format_certificate,
    format_hex,
    format_orbit_table,
    format_sequence,
    parse_state_spec,
    read_certificate,
    read_sequence,
    write_text,
)
from matroid_moves.matroid_state import Matroid, canonical_mask, orbit_under_gl
from matroid_moves.moves import replay_with_trajectory
from matroid_moves.orbit_engine import (
    GENERATOR_FLAGS,
    GeneratorSet,
    coverage_report,
    orbit,
    reachable,
)
from matroid_moves.projective_space import Space, count_affine_subgeometries
from matroid_moves.properties import (
    bad_colouring_bound,
    certify_unreachable,
    check_properties,
    sample_property1_witness,
    verify_certificate,
)
from matroid_moves.synthesis import export_result, result_for, synth_r4_walkthrough

logger = logging.getLogger(__name__)

# Generator sets understood by `synth --gens`, mapped to (method, swap kind)
SYNTH_ALPHABETS: Dict[FrozenSet[str], Tuple[str, Optional[str]]] = {
    frozenset({"swap_on", "swap_off", "hypcomp"}): ("full", None),
    frozenset({"swap_on", "hypcomp"}): ("single", "on"),
    frozenset({"swap_off", "hypcomp"}): ("single", "off"),
    frozenset({"lam", "swap_on", "swap_off"}): ("lambda", None),
}


class VerificationFailed(Exception):
    """A check ran to completion and came out negative."""

    pass


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        path = write_text(out, text)
        print(f"wrote: {path}")
    else:
        sys.stdout.write(text)


def _space(args: argparse.Namespace) -> Space:
    try:
        return Space(args.r)
    except DomainError as e:
        raise FormatError(f"--r: {e}") from e


def _state(space: Space, spec: str) -> Matroid:
    return parse_state_spec(space, spec)


# =============================================================================
# Subcommands
# =============================================================================


def cmd_orbit(args: argparse.Namespace) -> None:
    space = _space(args)
    start = _state(space, args.start)
    gens = GeneratorSet.parse(args.gens)
    try:
        table = orbit(space, start, gens, budget=args.budget)
    except BudgetExhaustedError as e:
        print(f"states: >{len(e.table)}")
        print(f"frontier: {len(e.frontier)}")
        raise VerificationFailed(str(e)) from e
    print(f"r: {space.r}")
    print(f"start: {format_hex(start.mask)}")
    print(f"generators: {','.join(gens.names())}")
    print(f"states: {len(table)}")
    print(f"depth: {table.depth}")
    if args.coverage:
        sys.stdout.write(coverage_report(table).to_text())
    if args.out:
        path = write_text(args.out, format_orbit_table(table))
        print(f"wrote: {path}")


def cmd_reach(args: argparse.Namespace) -> None:
    space = _space(args)
    start = _state(space, args.start)
    target = _state(space, args.target)
    gens = GeneratorSet.parse(args.gens)
    try:
        seq = reachable(space, start, target, gens, budget=args.budget)
    except IndeterminateError as e:
        print("reachable: unknown")
        raise VerificationFailed(str(e)) from e
    if seq is None:
        print("reachable: 0")
        raise VerificationFailed(f"{format_hex(target.mask)} is not reachable")
    print("reachable: 1")
    print(f"length: {len(seq)}")
    _emit(
        format_sequence(seq, r=space.r, start=start.mask, target=target.mask),
        args.out,
    )


def _synth_method(args: argparse.Namespace) -> Tuple[str, Optional[str]]:
    if args.method:
        return args.method, args.kind
    gens = GeneratorSet.parse(args.gens)
    enabled = frozenset(attr for attr in GENERATOR_FLAGS.values() if getattr(gens, attr))
    if enabled not in SYNTH_ALPHABETS:
        raise DomainError(
            f"No synthesizer for generators {','.join(gens.names())}; "
            "use swap,hypcomp or swap+,hypcomp or swap-,hypcomp or lambda,swap"
        )
    return SYNTH_ALPHABETS[enabled]


def cmd_synth(args: argparse.Namespace) -> None:
    space = _space(args)
    method, kind = _synth_method(args)
    if method == "walkthrough":
        results = synth_r4_walkthrough(space)
        for index, result in enumerate(results):
            print(f"{result.label}: {len(result.seq)} moves, target {format_hex(result.target)}")
            if args.out:
                directory = Path(args.out)
                directory.mkdir(parents=True, exist_ok=True)
                write_text(directory / f"{index:02d}.seq", export_result(result))
        return
    if not args.target:
        raise FormatError("synth needs --target")
    target = _state(space, args.target)
    result = result_for(space, target.mask, method=method, kind=kind)
    logger.info(f"Synthesized {len(result.seq)} moves with {result.method}")
    _emit(export_result(result), args.out)


def cmd_replay(args: argparse.Namespace) -> None:
    seq_file = read_sequence(args.file)
    r = args.r if args.r is not None else seq_file.r
    if r is None:
        raise FormatError("Rank unknown: pass --r or add a '# r=' header", path=args.file)
    space = Space(r)
    if args.start:
        start = _state(space, args.start)
    elif seq_file.start is not None:
        start = Matroid.from_mask(space, seq_file.start)
    else:
        start = Matroid.full(space)
    try:
        final, steps = replay_with_trajectory(space, start, seq_file.seq)
    except ReplayError as e:
        raise VerificationFailed(str(e)) from e
    if args.trajectory:
        for step in steps:
            print(f"{step.index} {step.move.to_text()} {format_hex(step.mask)}")
    print(f"final: {format_hex(final.mask)}")

    expected = seq_file.target
    if args.target:
        expected = _state(space, args.target).mask
    if expected is not None:
        match = final.mask == expected
        print(f"match: {int(match)}")
        if not match:
            raise VerificationFailed(
                f"Replay ends at {format_hex(final.mask)}, expected {format_hex(expected)}"
            )


def _subject(args: argparse.Namespace) -> Matroid:
    """The state named by --state, or a sampled Property 1 witness."""
    if args.r is None:
        if not args.find_witness:
            raise FormatError(f"{args.command} needs --r")
        args.r = WITNESS_RANK
    space = _space(args)
    if args.find_witness:
        if args.seed is None:
            raise FormatError("--find-witness needs an explicit --seed")
        witness = sample_property1_witness(space, seed=args.seed, max_tries=args.max_tries)
        if witness is None:
            tries = args.max_tries or get_config().witness_max_tries
            raise VerificationFailed(f"No Property 1 witness within {tries} tries")
        print(f"witness: {format_hex(witness.mask)}")
        return witness
    if not args.state:
        raise FormatError("Pass --state or --find-witness")
    return _state(space, args.state)


def cmd_check_props(args: argparse.Namespace) -> None:
    M = _subject(args)
    sys.stdout.write(check_properties(M).to_text())


def cmd_certify(args: argparse.Namespace) -> None:
    if args.verify:
        cert = read_certificate(args.verify)
        ok = verify_certificate(cert)
        print(f"verified: {int(ok)}")
        if not ok:
            raise VerificationFailed(f"{args.verify} does not verify")
        return
    M = _subject(args)
    try:
        cert = certify_unreachable(M)
    except CertificateRefused as e:
        raise VerificationFailed(f"Certificate refused at check {e.check}: {e}") from e
    _emit(format_certificate(cert), args.out)


def cmd_count(args: argparse.Namespace) -> None:
    rows = []
    for r in range(args.r_min, args.r_max + 1):
        bound = bad_colouring_bound(r)
        row = {
            "r": r,
            "bad_colourings": bound.count,
            "probability": bound.probability_float,
            "below_one": bound.below_one,
        }
        if r <= args.enumerate_max:
            row["affine_subgeometries"] = count_affine_subgeometries(Space(r))
        rows.append(row)
    frame = pd.DataFrame(rows).set_index("r")
    print(frame.to_string())


def cmd_canon(args: argparse.Namespace) -> None:
    space = _space(args)
    M = _state(space, args.state)
    canon = canonical_mask(space, M.mask)
    print(f"mask: {format_hex(M.mask)}")
    print(f"canonical: {format_hex(canon)}")
    print(f"class_size: {len(orbit_under_gl(space, M.mask))}")


COMMANDS = {
    "orbit": cmd_orbit,
    "reach": cmd_reach,
    "synth": cmd_synth,
    "replay": cmd_replay,
    "check-props": cmd_check_props,
    "certify": cmd_certify,
    "count": cmd_count,
    "canon": cmd_canon,
}


# =============================================================================
# Argument parsing
# =============================================================================


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matroid-moves",
        description="Moves between restrictions of binary projective geometries",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Logging level for stderr (default from MATROID_MOVES_LOG_LEVEL)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbit", help="Breadth-first orbit of a state")
    p.add_argument("--r", type=int, required=True, help="Rank of P_r")
    p.add_argument("--start", default="full", help="Start state (default: full)")
    p.add_argument("--gens", required=True, help="Comma list of generators")
    p.add_argument("--budget", type=int, help="Maximum visited states")
    p.add_argument("--coverage", action="store_true", help="Print per-size coverage (r <= 4)")
    p.add_argument("--out", help="Write the orbit table here")

    p = sub.add_parser("reach", help="Shortest move sequence between two states")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--start", default="full")
    p.add_argument("--target", required=True)
    p.add_argument("--gens", required=True)
    p.add_argument("--budget", type=int)
    p.add_argument("--out", help="Write the sequence file here")

    p = sub.add_parser("synth", help="Constructive sequence from P_r to a target")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--target", help="Target state")
    p.add_argument("--gens", default="swap,hypcomp", help="Move alphabet (default: swap,hypcomp)")
    p.add_argument(
        "--method",
        choices=["full", "single", "lambda", "walkthrough"],
        help="Synthesizer, overriding --gens",
    )
    p.add_argument("--kind", choices=["on", "off"], default="on", help="Swap kind for --method single")
    p.add_argument("--out", help="Output file (a directory for --method walkthrough)")

    p = sub.add_parser("replay", help="Replay a sequence file")
    p.add_argument("file", help="Sequence file")
    p.add_argument("--r", type=int, help="Rank, if the file has no '# r=' header")
    p.add_argument("--start", help="Start state (default: file header, else full)")
    p.add_argument("--target", help="Expected final state (default: file header)")
    p.add_argument("--trajectory", action="store_true", help="Print every intermediate state")

    for name, help_text in (
        ("check-props", "Property 1 and Property 2 report"),
        ("certify", "Unreachability certificate"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument(
            "--r", type=int, help=f"Rank (default {WITNESS_RANK} with --find-witness)"
        )
        p.add_argument("--state", help="State to check")
        p.add_argument("--find-witness", action="store_true", help="Sample a Property 1 witness")
        p.add_argument("--seed", type=int, help="Seed for witness sampling")
        p.add_argument("--max-tries", type=int, help="Colourings to sample")
        if name == "certify":
            p.add_argument("--out", help="Write the certificate here")
            p.add_argument("--verify", metavar="FILE", help="Re-check a certificate file")

    p = sub.add_parser("count", help="Affine subgeometry counts and the bad-colouring bound")
    p.add_argument("--r-min", type=int, default=3)
    p.add_argument("--r-max", type=int, default=12)
    p.add_argument(
        "--enumerate-max", type=int, default=5, help="Enumerate subgeometries up to this r"
    )

    p = sub.add_parser("canon", help="GL(r,2) canonical form and class size")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--state", required=True)

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, run one subcommand and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    try:
        set_config(MovesConfig.from_env())
        level = args.log_level or get_config().log_level
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )

    try:
        COMMANDS[args.command](args)
    except VerificationFailed as e:
        logger.error(str(e))
        return EXIT_VERIFICATION_FAILED
    except (FormatError, DomainError, UnsupportedError, ConfigError) as e:
        logger.error(str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def main():
    """Console entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
