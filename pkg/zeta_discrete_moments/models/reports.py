"""Report models for validation and refinement runs."""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, Field


class TableSource(str, Enum):
    """Where a table of Stieltjes constants came from."""

    BUNDLED = "bundled"
    COMPUTED = "computed"


class StieltjesCheckEntry(BaseModel):
    """Comparison of one bundled constant with its recomputation."""

    n: int = Field(description="Index of the Stieltjes constant")
    bundled: str = Field(description="Bundled decimal value")
    computed: str = Field(description="Value from the Euler-Maclaurin computation")
    abs_diff: float = Field(description="Absolute difference of the two values")
    ok: bool = Field(description="Whether the difference is within tolerance")


class StieltjesCheckReport(BaseModel):
    """Result of cross-checking the bundle against the internal computation."""

    precision_bits: int = Field(description="Working precision of the recomputation")
    tolerance: float = Field(description="Largest accepted absolute difference")
    entries: list[StieltjesCheckEntry] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(entry.ok for entry in self.entries)

    @property
    def max_abs_diff(self) -> float:
        return max((entry.abs_diff for entry in self.entries), default=0.0)

    def __str__(self) -> str:
        status = "ok" if self.passed else "MISMATCH"
        return (
            f"{status}: {len(self.entries)} constants at {self.precision_bits} bits, "
            f"max |diff| = {self.max_abs_diff:.3e} (tolerance {self.tolerance:.1e})"
        )


class ZeroCountReport(BaseModel):
    """Comparison of a zero table's count with the Riemann-von Mangoldt formula."""

    height: float = Field(description="Height T at which zeros were counted")
    count: int = Field(description="Number of table ordinates with gamma <= T")
    expected: float = Field(
        description="Smooth count (T/2pi) log(T/2pi) - T/2pi + 7/8"
    )
    deviation: float = Field(description="count - expected")
    flagged: bool = Field(
        description="True when |deviation| > 2, suggesting missing or extra zeros"
    )
    within_table: bool = Field(
        default=True,
        description="False when T lies above the largest ordinate in the table",
    )

    def __str__(self) -> str:
        flag = " FLAGGED" if self.flagged else ""
        outside = " (beyond table)" if not self.within_table else ""
        return (
            f"T={self.height:.6f}: count {self.count}, expected {self.expected:.3f}, "
            f"deviation {self.deviation:+.3f}{flag}{outside}"
        )


class RefinementEntry(BaseModel):
    """Outcome of refining one ordinate."""

    index: int = Field(description="1-based position in the table")
    original: str = Field(description="Ordinate as read from the table")
    refined: str = Field(description="Refined ordinate")
    shift: float = Field(description="refined - original")
    residual: float = Field(description="|zeta(1/2 + i gamma)| after refinement")


class RefinementReport(BaseModel):
    """Summary of refining a table of ordinates."""

    target_digits: int = Field(description="Requested correct decimal digits")
    precision_bits: int = Field(description="Working precision of the evaluation")
    entries: list[RefinementEntry] = Field(default_factory=list)

    @property
    def max_shift(self) -> float:
        return max((abs(entry.shift) for entry in self.entries), default=0.0)

    @property
    def max_residual(self) -> float:
        return max((entry.residual for entry in self.entries), default=0.0)
