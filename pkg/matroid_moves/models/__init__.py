"""Data models for matroid move computations."""

from matroid_moves.models.moves import Move, MoveKind, MoveSequence, SwapKind, TrajectoryStep
from matroid_moves.models.orbits import CoverageReport, CoverageRow
from matroid_moves.models.properties import (
    Certificate,
    CertificateRow,
    Property1Result,
    Property2Result,
    PropertyReport,
)
from matroid_moves.models.synthesis import SynthesisResult

__all__ = [
    "Certificate",
    "CertificateRow",
    "CoverageReport",
    "CoverageRow",
    "Move",
    "MoveKind",
    "MoveSequence",
    "Property1Result",
    "Property2Result",
    "PropertyReport",
    "SwapKind",
    "SynthesisResult",
    "TrajectoryStep",
]
