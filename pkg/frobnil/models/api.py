"""Request and response models for the HTTP API."""

from typing import List, Optional

from pydantic import BaseModel, Field


class NormalizeRequest(BaseModel):
    """Expression to bring into normal form."""
    n: int = Field(ge=1)
    expr: str
    target: str = "nilhecke"    # nilhecke, polynomial, nilcoxeter or odd-nilhecke


class ActRequest(BaseModel):
    """A nilHecke element acting on a polynomial."""
    n: int = Field(ge=1)
    expr: str
    on: str


class VerifyRequest(BaseModel):
    """Parameters of a verification run."""
    n: int = Field(ge=1)
    seed: Optional[int] = None
    degree_cap: Optional[int] = None


class ElementResponse(BaseModel):
    """A normal form, printed."""
    algebra: str
    n: int
    target: str
    result: str
    terms: int                  # number of basis keys in the result


class GradedTerm(BaseModel):
    """Degree of one term of a normal form."""
    term: str
    z_degree: Optional[int] = None    # None when the algebra is ungraded
    parity: int


class DegreeResponse(BaseModel):
    algebra: str
    n: int
    terms: List[GradedTerm]


class ObjectResponse(BaseModel):
    """A structural object of an algebra, printed."""
    algebra: str
    object: str                 # "dual-basis", "tau" or "nakayama"
    values: List[str]
