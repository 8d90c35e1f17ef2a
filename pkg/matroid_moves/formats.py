"""
Text formats for matroids, move sequences, certificates and orbit tables.

All masks are written as plain hexadecimal of the membership integer, so
the least significant bit is element 1:

    r=3, {1, 2}        ->  ground=3
    r=3, {1, 2, 5, 6}  ->  ground=33

This module provides:
1. Matroid files ("r=<int>" then "ground=<hex>" or "elements=<list>")
2. Inline state specs used by the command line (full, empty, hex=, ...)
3. Sequence files (one move per line, optional "# key=value" headers)
4. Certificate files ("key: value" headers, then one row per functional)
5. Orbit table export ("state_hex predecessor_hex move")
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Union

from matroid_moves.errors import DomainError, FormatError
from matroid_moves.matroid_state import Matroid, named_matroid
from matroid_moves.models.moves import Move, MoveSequence
from matroid_moves.models.properties import Certificate, CertificateRow
from matroid_moves.orbit_engine import OrbitTable
from matroid_moves.projective_space import Space

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def validate_file_exists(file_path: PathLike, min_size_bytes: int = 1) -> Path:
    """
    Validate that a file exists and is not empty.

    Args:
        file_path: Path to the file
        min_size_bytes: Minimum file size in bytes (default 1)

    Returns:
        The path as a Path

    Raises:
        FormatError: If the file doesn't exist or is too small
    """
    path = Path(file_path)
    if not path.is_file():
        raise FormatError(f"File does not exist: {path}")

    size = path.stat().st_size
    if size < min_size_bytes:
        raise FormatError(
            f"File is too small ({size} bytes, expected at least {min_size_bytes}): {path}"
        )
    return path


def read_text(file_path: PathLike) -> str:
    return validate_file_exists(file_path).read_text()


def write_text(file_path: PathLike, text: str) -> Path:
    """Write text, creating parent directories."""
    path = Path(file_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    logger.info(f"Wrote {path}")
    return path


# =============================================================================
# Masks and matroids
# =============================================================================


def format_hex(mask: int) -> str:
    return f"{mask:x}"


def parse_hex(text: str) -> int:
    """Parse a hex mask, with or without a 0x prefix.

    Raises:
        FormatError: If text is not hexadecimal
    """
    value = text.strip().lower()
    if value.startswith("0x"):
        value = value[2:]
    try:
        return int(value, 16)
    except ValueError as e:
        raise FormatError(f"Not a hex mask: {text!r}") from e


def parse_elements(text: str) -> List[int]:
    """Parse a comma-separated element list; an empty list is allowed."""
    items = [item.strip() for item in text.split(",") if item.strip()]
    try:
        return [int(item) for item in items]
    except ValueError as e:
        raise FormatError(f"Not an element list: {text!r}") from e


def _key_values(text: str, path: Optional[str]) -> Dict[str, tuple]:
    """Collect key=value lines, remembering their line numbers."""
    values: Dict[str, tuple] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        key, sep, value = stripped.partition("=")
        if not sep:
            raise FormatError(f"Expected key=value, got {stripped!r}", line=number, path=path)
        key = key.strip()
        if key in values:
            raise FormatError(f"Duplicate key {key!r}", line=number, path=path)
        values[key] = (value.strip(), number)
    return values


def parse_matroid(text: str, path: Optional[str] = None) -> Matroid:
    """Parse matroid text.

    Example:
        r=3
        ground=33

    Raises:
        FormatError: On malformed text, naming the 1-based line
    """
    values = _key_values(text, path)
    if "r" not in values:
        raise FormatError("Missing r=<int> line", path=path)
    unknown = set(values) - {"r", "ground", "elements"}
    if unknown:
        key = sorted(unknown)[0]
        raise FormatError(f"Unknown key {key!r}", line=values[key][1], path=path)

    raw_r, r_line = values["r"]
    try:
        space = Space(int(raw_r))
    except (ValueError, DomainError) as e:
        raise FormatError(f"Bad rank {raw_r!r}: {e}", line=r_line, path=path) from e

    if ("ground" in values) == ("elements" in values):
        raise FormatError("Exactly one of ground= or elements= is required", path=path)
    try:
        if "ground" in values:
            raw, number = values["ground"]
            return Matroid.from_mask(space, parse_hex(raw))
        raw, number = values["elements"]
        return Matroid.from_elements(space, parse_elements(raw))
    except (FormatError, DomainError) as e:
        raise FormatError(str(e), line=number, path=path) from e


def format_matroid(M: Matroid) -> str:
    """Render a matroid in the two-line text format."""
    return f"r={M.r}\nground={format_hex(M.mask)}\n"


def read_matroid(file_path: PathLike) -> Matroid:
    path = validate_file_exists(file_path)
    return parse_matroid(path.read_text(), path=str(path))


def parse_state_spec(space: Space, spec: str) -> Matroid:
    """Resolve an inline state description.

    Accepted forms: full, empty, elements=1,2,3, hex=33 (or ground=33),
    named:<catalogue name>, or the path of a matroid file.

    Raises:
        FormatError: If the spec cannot be resolved for this space
    """
    text = spec.strip()
    try:
        if text == "full":
            return Matroid.full(space)
        if text == "empty":
            return Matroid.empty(space)
        if text.startswith("elements="):
            return Matroid.from_elements(space, parse_elements(text[len("elements="):]))
        if text.startswith("hex=") or text.startswith("ground="):
            return Matroid.from_mask(space, parse_hex(text.partition("=")[2]))
        if text.startswith("named:"):
            return named_matroid(space, text[len("named:"):])
    except DomainError as e:
        raise FormatError(f"State {spec!r}: {e}") from e

    M = read_matroid(text)
    if M.space != space:
        raise FormatError(f"{text} describes r={M.r}, expected r={space.r}", path=text)
    return M


# =============================================================================
# Sequences
# =============================================================================


@dataclass
class SequenceFile:
    """A move sequence with the optional headers of its file."""

    seq: MoveSequence
    r: Optional[int] = None
    start: Optional[int] = None
    target: Optional[int] = None
    headers: Dict[str, str] = field(default_factory=dict)


def format_sequence(
    seq: MoveSequence,
    r: Optional[int] = None,
    start: Optional[int] = None,
    target: Optional[int] = None,
    headers: Optional[Dict[str, str]] = None,
    trailer: Iterable[str] = (),
) -> str:
    """Render a sequence file; headers and trailer lines are '#' comments."""
    lines = []
    if r is not None:
        lines.append(f"# r={r}")
    if start is not None:
        lines.append(f"# start={format_hex(start)}")
    if target is not None:
        lines.append(f"# target={format_hex(target)}")
    for key, value in (headers or {}).items():
        lines.append(f"# {key}={value}")
    lines += [move.to_text() for move in seq.moves]
    lines += [f"# {line}" for line in trailer]
    return "".join(f"{line}\n" for line in lines)


def parse_sequence_file(text: str, path: Optional[str] = None) -> SequenceFile:
    """Parse a sequence file, collecting '# key=value' headers.

    Raises:
        FormatError: With the 1-based line number of the first bad line
    """
    moves = []
    headers: Dict[str, str] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            body = stripped[1:].strip()
            key, sep, value = body.partition("=")
            if sep and " " not in key.strip() and key.strip():
                headers.setdefault(key.strip(), value.strip())
            continue
        try:
            moves.append(Move.parse(stripped))
        except FormatError as e:
            raise FormatError(str(e), line=number, path=path) from e

    result = SequenceFile(seq=MoveSequence(moves=moves), headers=headers)
    try:
        if "r" in headers:
            result.r = int(headers["r"])
        if "start" in headers:
            result.start = parse_hex(headers["start"])
        if "target" in headers:
            result.target = parse_hex(headers["target"])
    except ValueError as e:
        raise FormatError(f"Bad sequence header: {e}", path=path) from e
    return result


def read_sequence(file_path: PathLike) -> SequenceFile:
    path = validate_file_exists(file_path)
    return parse_sequence_file(path.read_text(), path=str(path))


# =============================================================================
# Certificates
# =============================================================================

CERTIFICATE_KIND = "unreachability-certificate"
_ROW_KEYS = ("a", "green_rank", "red_rank", "sigma_p2", "lambda_eq", "lambda_p2")


def format_certificate(cert: Certificate) -> str:
    """Render a certificate as 'key: value' headers and one row per functional."""
    lines = [
        f"kind: {CERTIFICATE_KIND}",
        f"r: {cert.r}",
        f"witness: {format_hex(cert.witness)}",
        f"omega_p2: {int(cert.omega_p2)}",
        f"full_fails_p2: {int(cert.full_fails_p2)}",
        f"full_failing_functional: {cert.full_failing_functional}",
        f"functionals: {len(cert.rows)}",
    ]
    for row in cert.rows:
        lines.append(
            f"a={row.a} green_rank={row.green_rank} red_rank={row.red_rank} "
            f"sigma_p2={int(row.sigma_p2)} lambda_eq={int(row.lambda_eq)} "
            f"lambda_p2={int(row.lambda_p2)}"
        )
    return "".join(f"{line}\n" for line in lines)


def _parse_row(line: str, number: int, path: Optional[str]) -> CertificateRow:
    fields: Dict[str, int] = {}
    for item in line.split():
        key, sep, value = item.partition("=")
        if not sep or key not in _ROW_KEYS:
            raise FormatError(f"Bad certificate row item {item!r}", line=number, path=path)
        try:
            fields[key] = int(value)
        except ValueError as e:
            raise FormatError(f"Bad value in {item!r}", line=number, path=path) from e
    missing = [key for key in _ROW_KEYS if key not in fields]
    if missing:
        raise FormatError(f"Certificate row lacks {missing}", line=number, path=path)
    return CertificateRow(
        a=fields["a"],
        green_rank=fields["green_rank"],
        red_rank=fields["red_rank"],
        sigma_p2=bool(fields["sigma_p2"]),
        lambda_eq=bool(fields["lambda_eq"]),
        lambda_p2=bool(fields["lambda_p2"]),
    )


def parse_certificate(text: str, path: Optional[str] = None) -> Certificate:
    """Parse certificate text.

    Raises:
        FormatError: On malformed text, naming the 1-based line
    """
    header: Dict[str, str] = {}
    rows = []
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped.startswith("a="):
            rows.append(_parse_row(stripped, number, path))
            continue
        key, sep, value = stripped.partition(":")
        if not sep:
            raise FormatError(f"Expected 'key: value', got {stripped!r}", line=number, path=path)
        header[key.strip()] = value.strip()

    if header.get("kind") != CERTIFICATE_KIND:
        raise FormatError(f"Not an {CERTIFICATE_KIND}", path=path)
    try:
        cert = Certificate(
            r=int(header["r"]),
            witness=parse_hex(header["witness"]),
            omega_p2=bool(int(header["omega_p2"])),
            full_fails_p2=bool(int(header["full_fails_p2"])),
            full_failing_functional=int(header["full_failing_functional"]),
            rows=rows,
        )
    except KeyError as e:
        raise FormatError(f"Certificate header lacks {e.args[0]!r}", path=path) from e
    except ValueError as e:
        raise FormatError(f"Bad certificate header value: {e}", path=path) from e
    declared = header.get("functionals")
    if declared is not None and declared != str(len(rows)):
        raise FormatError(
            f"Certificate declares {declared} functionals but lists {len(rows)}", path=path
        )
    return cert


def read_certificate(file_path: PathLike) -> Certificate:
    path = validate_file_exists(file_path)
    return parse_certificate(path.read_text(), path=str(path))


# =============================================================================
# Orbit tables
# =============================================================================


def format_orbit_table(table: OrbitTable) -> str:
    """One line per visited state in discovery order: state, predecessor, move."""
    lines = []
    for state, (previous, move) in table.parents.items():
        if move is None:
            lines.append(f"{format_hex(state)} - root")
        else:
            lines.append(f"{format_hex(state)} {format_hex(previous)} {move.to_text()}")
    return "".join(f"{line}\n" for line in lines)

