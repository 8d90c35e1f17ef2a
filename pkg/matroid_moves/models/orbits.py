"""Pydantic models for orbit coverage reports."""

from typing import List

import pandas as pd
from pydantic import BaseModel, Field


class CoverageRow(BaseModel):
    """Visited states and canonical classes of one cardinality."""

    size: int = Field(..., description="Number of green elements")
    states: int = Field(..., description="Visited labeled states of this size")
    total_states: int = Field(..., description="All labeled states of this size")
    classes: int = Field(..., description="Visited canonical classes of this size")
    total_classes: int = Field(..., description="All canonical classes of this size")


class CoverageReport(BaseModel):
    """Per-cardinality coverage of an orbit table."""

    r: int = Field(..., description="Rank of the ambient geometry")
    root: int = Field(..., description="Membership word of the start state")
    generators: List[str] = Field(..., description="Generator flags of the search")
    rows: List[CoverageRow] = Field(default_factory=list)

    @property
    def visited(self) -> int:
        return sum(row.states for row in self.rows)

    @property
    def visited_classes(self) -> int:
        return sum(row.classes for row in self.rows)

    @property
    def total_classes(self) -> int:
        return sum(row.total_classes for row in self.rows)

    @property
    def complete(self) -> bool:
        """True if every canonical class was visited."""
        return all(row.classes == row.total_classes for row in self.rows)

    def to_frame(self) -> pd.DataFrame:
        """Coverage as a DataFrame indexed by cardinality."""
        frame = pd.DataFrame([row.model_dump() for row in self.rows])
        if frame.empty:
            return frame
        return frame.set_index("size")

    def to_text(self) -> str:
        """Fixed-width table followed by totals."""
        lines = [f"r: {self.r}", f"root: {self.root:x}", f"gens: {','.join(self.generators)}"]
        lines.append("size states/total classes/total")
        for row in self.rows:
            lines.append(
                f"{row.size:4d} {row.states}/{row.total_states} "
                f"{row.classes}/{row.total_classes}"
            )
        lines.append(f"visited: {self.visited}")
        lines.append(f"classes: {self.visited_classes}/{self.total_classes}")
        return "\n".join(lines) + "\n"
