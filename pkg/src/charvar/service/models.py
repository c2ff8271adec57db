"""Request and response models for the HTTP service.

PolyResult mirrors the canonical payload from formats exactly, so a
thin client can feed service responses straight back into the local
renderers and get byte-identical output.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

GroupName = Literal["gl", "sl", "pgl"]


class EPolyRequest(BaseModel):
    group: GroupName
    n: int = Field(ge=1)
    r: int = Field(ge=1)
    stratum: str | None = None


class TableRequest(BaseModel):
    group: GroupName
    n_max: int = Field(ge=1)
    r_max: int = Field(ge=1)
    per_stratum: bool = False


class VerifyRequest(BaseModel):
    n: int = Field(ge=1)
    r: int = Field(ge=1)
    qs: list[int] = Field(min_length=1)


class SelftestRequest(BaseModel):
    criteria: list[int] | None = None


class PolyResult(BaseModel):
    group: GroupName
    n: int
    r: int
    stratum: str | None = None
    variable: Literal["x"] = "x"
    coefficients: list[int]
    degree: int
    euler_char: int


class VerifyRow(BaseModel):
    n: int
    r: int
    q: int
    raw_count: int
    orbit_count: int
    symbolic: int
    match: bool


class VerifyResponse(BaseModel):
    status: Literal["ok", "warning", "failure"]
    rows: list[VerifyRow]


class SelftestItem(BaseModel):
    number: int
    title: str
    passed: bool
    seconds: float
    detail: str


class SelftestResponse(BaseModel):
    passed: bool
    items: list[SelftestItem]
