"""Pydantic models for moves, move sequences and replay trajectories."""

from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from matroid_moves.errors import FormatError


class MoveKind(str, Enum):
    """Operation tags. Definition order is the generator sort order."""

    OMEGA = "omega"
    SIGMA = "sigma"
    LAMBDA = "lambda"
    HYPCOMP = "hypcomp"
    SWAP_ON = "swap+"
    SWAP_OFF = "swap-"


class SwapKind(str, Enum):
    """Colour of the pivot of a pointed swap."""

    ON = "on"
    OFF = "off"


_KIND_ORDER: Dict[MoveKind, int] = {kind: i for i, kind in enumerate(MoveKind)}
_PARAM_NAME: Dict[MoveKind, str] = {
    MoveKind.SIGMA: "a",
    MoveKind.LAMBDA: "a",
    MoveKind.HYPCOMP: "a",
    MoveKind.SWAP_ON: "f",
    MoveKind.SWAP_OFF: "f",
}


class Move(BaseModel):
    """A single operation on a restriction of P_r.

    Omega carries no parameter; sigma, lambda and hypcomp carry a functional
    a; the pointed swaps carry their pivot element f.
    """

    model_config = ConfigDict(frozen=True)

    kind: MoveKind = Field(..., description="Operation tag")
    param: Optional[int] = Field(None, description="Functional a or pivot element f")

    @model_validator(mode="after")
    def check_param(self) -> "Move":
        """Validate the parameter against the tag."""
        if self.kind is MoveKind.OMEGA:
            if self.param is not None:
                raise ValueError("omega takes no parameter")
        elif self.param is None or self.param < 1:
            raise ValueError(
                f"{self.kind.value} needs a positive parameter, got {self.param!r}"
            )
        return self

    @classmethod
    def omega(cls) -> "Move":
        return cls(kind=MoveKind.OMEGA)

    @classmethod
    def sigma(cls, a: int) -> "Move":
        return cls(kind=MoveKind.SIGMA, param=a)

    @classmethod
    def lam(cls, a: int) -> "Move":
        return cls(kind=MoveKind.LAMBDA, param=a)

    @classmethod
    def hypcomp(cls, a: int) -> "Move":
        return cls(kind=MoveKind.HYPCOMP, param=a)

    @classmethod
    def swap_on(cls, f: int) -> "Move":
        return cls(kind=MoveKind.SWAP_ON, param=f)

    @classmethod
    def swap_off(cls, f: int) -> "Move":
        return cls(kind=MoveKind.SWAP_OFF, param=f)

    @property
    def is_swap(self) -> bool:
        return self.kind in (MoveKind.SWAP_ON, MoveKind.SWAP_OFF)

    def sort_key(self) -> Tuple[int, int]:
        """Key ordering moves by tag, then parameter."""
        return (_KIND_ORDER[self.kind], self.param or 0)

    def to_text(self) -> str:
        """Render the move in its one-line text syntax.

        Examples:
            >>> Move.sigma(5).to_text()
            'sigma a=5'
            >>> Move.swap_on(3).to_text()
            'swap+ f=3'
        """
        if self.kind is MoveKind.OMEGA:
            return "omega"
        return f"{self.kind.value} {_PARAM_NAME[self.kind]}={self.param}"

    @classmethod
    def parse(cls, line: str) -> "Move":
        """Parse one line of move syntax.

        Raises:
            FormatError: If the line is not a valid move
        """
        parts = line.split()
        if not parts:
            raise FormatError("Empty move line")
        try:
            kind = MoveKind(parts[0])
        except ValueError as e:
            raise FormatError(f"Unknown move {parts[0]!r}") from e

        if kind is MoveKind.OMEGA:
            if len(parts) != 1:
                raise FormatError(f"omega takes no parameter: {line.strip()!r}")
            return cls.omega()

        expected = _PARAM_NAME[kind]
        if len(parts) != 2 or "=" not in parts[1]:
            raise FormatError(f"Expected '{kind.value} {expected}=<int>', got {line.strip()!r}")
        name, _, value = parts[1].partition("=")
        if name != expected:
            raise FormatError(f"{kind.value} takes {expected}=, got {name}=")
        try:
            param = int(value)
        except ValueError as e:
            raise FormatError(f"Parameter {value!r} is not an integer") from e
        if param < 1:
            raise FormatError(f"Parameter must be positive, got {param}")
        return cls(kind=kind, param=param)

    def __str__(self) -> str:
        return self.to_text()


class MoveSequence(BaseModel):
    """An ordered word of moves, applied left to right."""

    moves: List[Move] = Field(default_factory=list, description="Moves in order")

    def __len__(self) -> int:
        return len(self.moves)

    def __add__(self, other: "MoveSequence") -> "MoveSequence":
        return MoveSequence(moves=self.moves + other.moves)

    def reversed(self) -> "MoveSequence":
        """The inverse word; every generator is an involution."""
        return MoveSequence(moves=list(reversed(self.moves)))

    def kinds(self) -> List[MoveKind]:
        """Distinct move kinds used, in generator order."""
        return sorted({m.kind for m in self.moves}, key=lambda k: _KIND_ORDER[k])

    def to_text(self) -> str:
        return "".join(f"{m.to_text()}\n" for m in self.moves)

    @classmethod
    def parse(cls, text: str) -> "MoveSequence":
        """Parse newline-separated moves; blank and '#' lines are skipped.

        Raises:
            FormatError: With the 1-based line number of the first bad line
        """
        moves = []
        for number, line in enumerate(text.splitlines(), start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            try:
                moves.append(Move.parse(stripped))
            except FormatError as e:
                raise FormatError(str(e), line=number) from e
        return cls(moves=moves)


class TrajectoryStep(BaseModel):
    """State reached after one move of a replay."""

    index: int = Field(..., description="0-based position of the move")
    move: Move = Field(..., description="Move applied")
    mask: int = Field(..., description="Membership word after the move")
    no_op: bool = Field(False, description="True for a lambda with empty trace")
