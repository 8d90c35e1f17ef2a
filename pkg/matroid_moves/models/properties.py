"""Pydantic models for Property 1/2 reports and unreachability certificates."""

from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field


class Property1Result(BaseModel):
    """Outcome of the Property 1 check."""

    holds: bool = Field(..., description="True if every cocircuit difference splits well")
    failing_pair: Optional[Tuple[int, int]] = Field(
        None, description="First (a, b) whose difference C*(a) - C*(b) fails"
    )
    side: Optional[str] = Field(None, description="'green' or 'red' side that failed")
    rank: Optional[int] = Field(None, description="Rank found on the failing side")


class Property2Result(BaseModel):
    """Outcome of the Property 2 check."""

    holds: bool = Field(..., description="True if every cocircuit splits into spanning halves")
    failing_functional: Optional[int] = Field(
        None, description="First functional whose cocircuit fails"
    )
    side: Optional[str] = Field(None, description="'green' or 'red' side that failed")
    rank: Optional[int] = Field(None, description="Rank found on the failing side")


class PropertyReport(BaseModel):
    """Both property checks for one colouring."""

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "r": 3,
                "mask": 127,
                "property1": {
                    "holds": False,
                    "failing_pair": [1, 2],
                    "side": "red",
                    "rank": 0,
                },
                "property2": {
                    "holds": False,
                    "failing_functional": 1,
                    "side": "red",
                    "rank": 0,
                },
            }
        }
    )

    r: int = Field(..., description="Rank of the ambient geometry")
    mask: int = Field(..., description="Membership word of the green set")
    property1: Property1Result
    property2: Property2Result

    def to_text(self) -> str:
        """Render the report as stable key: value lines."""
        lines = [
            f"r: {self.r}",
            f"mask: {self.mask:x}",
            f"property1: {int(self.property1.holds)}",
        ]
        if not self.property1.holds:
            a, b = self.property1.failing_pair or (0, 0)
            lines.append(
                f"property1_failure: a={a} b={b} side={self.property1.side} "
                f"rank={self.property1.rank}"
            )
        lines.append(f"property2: {int(self.property2.holds)}")
        if not self.property2.holds:
            lines.append(
                f"property2_failure: a={self.property2.failing_functional} "
                f"side={self.property2.side} rank={self.property2.rank}"
            )
        return "\n".join(lines) + "\n"


class CertificateRow(BaseModel):
    """Per-functional evidence of an unreachability certificate."""

    a: int = Field(..., description="Functional")
    green_rank: int = Field(..., description="rank(C*(a) & green)")
    red_rank: int = Field(..., description="rank(C*(a) - green)")
    sigma_p2: bool = Field(..., description="sigma_a(M) has Property 2")
    lambda_eq: bool = Field(..., description="lambda_a(M) equals omega sigma_a(M)")
    lambda_p2: bool = Field(..., description="lambda_a(M) has Property 2")


class Certificate(BaseModel):
    """Evidence that no omega/sigma/lambda word links a colouring to P_r.

    The witness and its complement satisfy Property 2, every switching and
    local complementation preserves it, and P_r fails it; the set of
    Property 2 colourings is therefore closed under all three operations
    and excludes P_r.
    """

    r: int = Field(..., description="Rank of the ambient geometry")
    witness: int = Field(..., description="Membership word of the witness")
    omega_p2: bool = Field(..., description="omega(M) has Property 2")
    full_fails_p2: bool = Field(..., description="P_r fails Property 2")
    full_failing_functional: int = Field(
        ..., description="A functional exhibiting the failure on P_r"
    )
    rows: List[CertificateRow] = Field(default_factory=list)

    @property
    def valid(self) -> bool:
        """True if every recorded check passed."""
        return (
            self.omega_p2
            and self.full_fails_p2
            and len(self.rows) == (1 << self.r) - 1
            and all(
                row.green_rank == self.r
                and row.red_rank == self.r
                and row.sigma_p2
                and row.lambda_eq
                and row.lambda_p2
                for row in self.rows
            )
        )
