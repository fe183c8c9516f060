"""Pydantic request/response models for the HTTP service.

Rationals travel as "p/q" strings; sets as {"arcs": [{"center": "1/4",
"halfwidth": "1/16"}]}.  Values are re-parsed into exact rationals at the
boundary, so the service never computes in floats.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class ArcModel(BaseModel):
    center: str
    halfwidth: str


class SetModel(BaseModel):
    arcs: list[ArcModel]


class EvalRequest(BaseModel):
    a: SetModel
    b: SetModel
    c: Optional[SetModel] = None
    tau: Optional[str] = None
    eta: Optional[str] = None


class EvalResponse(BaseModel):
    measures: dict[str, str]
    triple: Optional[str] = None
    defect: Optional[str] = None
    defect_truncated: Optional[str] = None
    tau_matching: Optional[str] = None
    kneser_defect: str
    admissibility: Optional[dict] = None


class StarRequest(BaseModel):
    a: str
    b: str
    c: str


class StarResponse(BaseModel):
    value: str


class FlowRequest(BaseModel):
    a: SetModel
    b: SetModel
    c: SetModel
    grid: Optional[list[str]] = None
    points: int = Field(default=50, ge=1, le=2000)
    check_monotone: bool = False


class FlowResponse(BaseModel):
    csv: str
    window: int
    monotone: Optional[bool] = None
    violation: Optional[dict] = None


class CertifyRequest(BaseModel):
    a: SetModel
    b: SetModel
    c: SetModel
    eta: str
    n_max: int = Field(default=8, ge=1, le=16)


class SweepRequest(BaseModel):
    exponents: list[int] = Field(default=[4, 5, 6, 7, 8, 9, 10])
    n_max: int = Field(default=8, ge=1, le=16)


class SweepRow(BaseModel):
    delta: str
    defect: str
    max_symdiff: str


class SweepResponse(BaseModel):
    rows: list[SweepRow]
    slope: float


class AgreeRequest(BaseModel):
    a: SetModel
    b: SetModel
    c: SetModel
    n: int = Field(default=1024, ge=1)


class AgreeResponse(BaseModel):
    continuum: str
    discrete: str
    gap: str
    bound: str


class SearchRequest(BaseModel):
    n: int = Field(ge=1)
    sizes: tuple[int, int, int]
    objective: Literal["min_defect", "min_kneser"] = "min_defect"
    seed: int = 0


class SearchResponse(BaseModel):
    objective: str
    value: str
    sets: list[dict]


class ErrorResponse(BaseModel):
    error: str
    detail: str
