"""Request/response models shared by the HTTP service and the CLI."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

PlaceName = Literal["p0", "pinf", "palpha"]
SuiteName = Literal["tables25", "maximality", "oracles", "maps", "all"]
FormatName = Literal["table", "json", "csv"]


class SemigroupRequest(BaseModel):
    q: int = Field(..., ge=3, description="odd prime power, m = (q+1)/2")
    i: int = Field(..., description="curve index, reduced mod m")
    place: PlaceName = "p0"
    oracle: bool = False


class OracleOutcome(BaseModel):
    method: str
    agrees: bool
    details: str = ""


class SemigroupResponse(BaseModel):
    q: int
    m: int
    i: int
    place: PlaceName
    genus: int
    gaps: list[int]
    generators: Optional[list[int]] = None
    apery: Optional[list[int]] = None
    oracle: Optional[OracleOutcome] = None
    field: Optional[dict] = None


class ClassifyRequest(BaseModel):
    m: Optional[int] = Field(None, ge=2)
    q: Optional[int] = Field(None, ge=3)
    with_field_checks: bool = False
    paper_labels: bool = False
    qmax: int = 49

    @model_validator(mode="after")
    def _one_of_m_q(self):
        if (self.m is None) == (self.q is None):
            raise ValueError("exactly one of m and q must be given")
        return self


class ClassEntry(BaseModel):
    canonical: int
    members: list[int]
    paper_label: int
    gaps: dict
    aut: Optional[dict] = None
    maximal: Optional[dict] = None
    profile_distinct: bool
    collisions: list[int]


class ClassifyResponse(BaseModel):
    m: int
    q: Optional[int] = None
    phi2: int
    class_count: int
    classes: list[ClassEntry]
    paper_labels: bool = False


class VerifyRequest(BaseModel):
    suite: SuiteName
    qmax: int = Field(49, ge=5)
    samples: int = Field(100, ge=1)


class CheckResult(BaseModel):
    name: str
    passed: bool
    details: str = ""


class VerifyResponse(BaseModel):
    suite: SuiteName
    qmax: int
    passed: bool
    total: int
    failed: int
    checks: list[CheckResult]
    first_failure: Optional[CheckResult] = None
