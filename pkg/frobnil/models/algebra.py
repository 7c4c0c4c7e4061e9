"""Algebra config records and algebra summaries."""

from typing import Dict, List, Optional

from pydantic import BaseModel, field_validator

from .report import ValidationReport


class BasisEntry(BaseModel):
    """One declared basis element."""
    label: str
    parity: int                     # 0 even, 1 odd
    degree: Optional[int] = None    # Z-degree, all or none declared

    @field_validator("parity")
    @classmethod
    def parity_is_bit(cls, value: int) -> int:
        if value not in (0, 1):
            raise ValueError("parity must be 0 or 1")
        return value


class MultEntry(BaseModel):
    """Structure constants b_left * b_right = sum coeff * b_k."""
    left: str
    right: str
    terms: Dict[str, str] = {}      # label -> rational as "p/q"


class AlgebraConfig(BaseModel):
    """A user-defined Frobenius superalgebra as read from a config file."""
    name: str
    basis: List[BasisEntry]
    unit: str
    trace: Dict[str, str] = {}      # label -> rational; missing labels trace to 0
    trace_parity: int = 0
    trace_degree: Optional[int] = None
    mult: List[MultEntry] = []


class AlgebraSummary(BaseModel):
    """What the API reports about one algebra."""
    name: str
    dim: int
    labels: List[str]
    parities: List[int]
    unit: str
    trace_parity: int
    symmetric: bool
    commutative: bool
    supercommutative: bool
    graded: bool
    validation: ValidationReport
