"""Pydantic model for synthesized move sequences."""

from typing import List

from pydantic import BaseModel, Field

from matroid_moves.models.moves import MoveSequence


class SynthesisResult(BaseModel):
    """A move sequence taking P_r to a target, with its trajectory.

    trajectory[0] is the mask of P_r and trajectory[i] the mask after
    seq.moves[i-1], so the last entry equals target.
    """

    r: int = Field(..., description="Rank of the ambient geometry")
    target: int = Field(..., description="Membership word of the target")
    seq: MoveSequence = Field(default_factory=MoveSequence)
    trajectory: List[int] = Field(default_factory=list)
    method: str = Field("", description="Synthesizer that produced the sequence")
    label: str = Field("", description="Name of the target, if it has one")
