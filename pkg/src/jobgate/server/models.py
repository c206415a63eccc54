"""Request/response schemas of the HTTP front."""

from __future__ import annotations

from pydantic import BaseModel, Field


class StatusResponse(BaseModel):
    status: int


class CallRequest(BaseModel):
    job: int
    data: list[int] = Field(default_factory=list)
    # buffer capacity; defaults to len(data), padded with zeros when larger
    size: int | None = None
    verbose: int = 0


class CallResponse(BaseModel):
    status: int
    data: list[int]


class SwapRequest(BaseModel):
    text: str
    verbose: int = 0


class SwapResponse(BaseModel):
    text: str


class VersionResponse(BaseModel):
    version: str


class PolyrootsRequest(BaseModel):
    coefficients: list[float]
    verbose: int = 0


class ComplexRoot(BaseModel):
    real: float
    imag: float


class PolyrootsResponse(BaseModel):
    roots: list[ComplexRoot]


class ServiceInfo(BaseModel):
    name: str
    base: int
    stages: int


class ManifestResponse(BaseModel):
    library: str
    version: str
    released: str
    services: list[ServiceInfo]
