"""Request/response schemas for the HTTP service."""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, Field

from ..invariants import BoundInterval
from ..reports import jsonable


class CertificateModel(BaseModel):
    kind: str
    detail: dict[str, Any]


class IntervalModel(BaseModel):
    lower: float | None
    upper: float | None
    exact: bool
    certificates: list[CertificateModel]

    @classmethod
    def from_bound(cls, bound: BoundInterval) -> "IntervalModel":
        return cls(
            lower=bound.lower,
            upper=bound.upper,
            exact=bound.exact,
            certificates=[
                CertificateModel(kind=c.kind, detail=jsonable(c.detail))
                for c in bound.certificates
            ],
        )


class EvalRequest(BaseModel):
    domain: str
    point: str
    explain: bool = False
    seed: int = 0
    constants: str | None = None  # raw text of a constants table


class EvalResponse(BaseModel):
    domain: str
    point: str
    squeezing: IntervalModel
    fridman: IntervalModel
    quotient: IntervalModel
    warnings: list[str] = []
    explain: str | None = None


class SweepRequest(BaseModel):
    a_start: float
    a_stop: float
    step: float
    format: Literal["csv", "json", "svg"] = "csv"
    jobs: int = Field(default=1, ge=1, le=64)
    seed: int = 0


class SweepRowModel(BaseModel):
    A: float
    a: float
    s_exact: float
    e_lower: float
    m_upper: float


class SweepResponse(BaseModel):
    rows: list[SweepRowModel]
    content: str
    media_type: str


class StabilityRequest(BaseModel):
    z0: str
    r1: float | None = None
    floor: float = 1e-6
    s_upper: float | None = None
    format: Literal["csv", "json", "svg"] = "csv"
    seed: int = 0


class TrajectoryPointModel(BaseModel):
    k: int
    r: float
    bound: float
    certificate_kind: str


class AnnulusReportModel(BaseModel):
    z0: str
    inner_radius: float
    s_lower: float
    s_upper: float | None
    e_lower: float
    e_upper: float
    m_lower: float
    m_upper: float | None
    conclusive: bool
    verdict: str
    evidence_converged: bool
    text: str


class StabilityResponse(BaseModel):
    z0: str
    rotation: float = 0.0
    s_trajectory: list[TrajectoryPointModel]
    e_trajectory: list[TrajectoryPointModel]
    s_limit: float
    s_converged: bool
    e_stable: bool
    annulus: AnnulusReportModel
    content: str
    media_type: str


class ErrorResponse(BaseModel):
    error: str
    message: str


class HealthResponse(BaseModel):
    status: str
    version: str
