"""HTTP front over the process-wide gate.

Raw endpoints mirror the three exported entry points one-to-one; the
/services endpoints drive the full staged protocol server-side so clients
get text-level calls.  A front-level lock keeps each staged sequence atomic
against concurrent requests (the gate itself only serializes single calls).
"""

from __future__ import annotations

import threading
from contextlib import asynccontextmanager

from fastapi import FastAPI, HTTPException

from .. import marshal
from .._version import RELEASE_DATE, __version__
from ..gate import Gate, GateError, MALFORMED_PAYLOAD, call_staged
from ..services import POLYROOTS_BASE, SWAP_BASE, VERSION_BASE, build_gate
from .models import (
    CallRequest,
    CallResponse,
    ComplexRoot,
    ManifestResponse,
    PolyrootsRequest,
    PolyrootsResponse,
    ServiceInfo,
    StatusResponse,
    SwapRequest,
    SwapResponse,
    VersionResponse,
)

_HTTP_BY_STATUS = {MALFORMED_PAYLOAD: 422}


def _gate_http_error(exc: GateError) -> HTTPException:
    code = _HTTP_BY_STATUS.get(exc.status, 400)
    return HTTPException(status_code=code, detail={"gate_status": exc.status, "message": str(exc)})


def create_app(gate: Gate | None = None) -> FastAPI:
    gate = gate if gate is not None else build_gate()
    staged_lock = threading.Lock()

    @asynccontextmanager
    async def lifespan(_: FastAPI):
        gate.gate_init()
        yield
        gate.gate_final()

    app = FastAPI(title="jobgate", version=__version__, lifespan=lifespan)

    def staged(base: int, payload: list[int], verbose: int) -> list[int]:
        with staged_lock:
            try:
                return call_staged(gate, base, payload, verbose)
            except GateError as exc:
                raise _gate_http_error(exc) from exc

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.get("/manifest", response_model=ManifestResponse)
    def manifest() -> ManifestResponse:
        return ManifestResponse(
            library="jobgate",
            version=__version__,
            released=RELEASE_DATE,
            services=[ServiceInfo(name=s.name, base=s.base, stages=s.stages) for s in gate.services],
        )

    @app.post("/gate/init", response_model=StatusResponse)
    def gate_init() -> StatusResponse:
        return StatusResponse(status=gate.gate_init())

    @app.post("/gate/final", response_model=StatusResponse)
    def gate_final() -> StatusResponse:
        return StatusResponse(status=gate.gate_final())

    @app.post("/gate/call", response_model=CallResponse)
    def gate_call(request: CallRequest) -> CallResponse:
        size = len(request.data) if request.size is None else request.size
        if size < 0:
            raise HTTPException(status_code=422, detail="size must be non-negative")
        buffer = list(request.data)
        if size > len(buffer):
            buffer.extend([0] * (size - len(buffer)))
        status = gate.gate_call(request.job, size, buffer, request.verbose)
        return CallResponse(status=status, data=buffer)

    @app.post("/services/swap", response_model=SwapResponse)
    def swap(request: SwapRequest) -> SwapResponse:
        try:
            payload = marshal.encode_text(request.text)
        except marshal.MarshalError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        output = staged(SWAP_BASE, payload, request.verbose)
        return SwapResponse(text=marshal.decode_text(output))

    @app.get("/services/version", response_model=VersionResponse)
    def version() -> VersionResponse:
        output = staged(VERSION_BASE, [], 0)
        return VersionResponse(version=marshal.decode_text(output))

    @app.post("/services/polyroots", response_model=PolyrootsResponse)
    def polyroots(request: PolyrootsRequest) -> PolyrootsResponse:
        try:
            fields = [marshal.format_decimal(c) for c in request.coefficients]
            payload = marshal.encode_record(fields) if fields else []
        except marshal.MarshalError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        output = staged(POLYROOTS_BASE, payload, request.verbose)
        values = [marshal.parse_decimal(f) for f in marshal.decode_record(output)]
        pairs = list(zip(values[0::2], values[1::2]))
        return PolyrootsResponse(roots=[ComplexRoot(real=re, imag=im) for re, im in pairs])

    return app


app = create_app()
