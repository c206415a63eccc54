"""The dispatch gate: one entry point, numbered jobs, staged sessions.

A job code selects a service (base, multiple of 10) and a stage (0-9).
Stages: 0 initialize (push input), 1 compute, 2 retrieve (pull output),
3 output-size query.  The only data channel is a caller-owned buffer of
signed 32-bit integers; the gate never keeps a reference to it.
"""

from __future__ import annotations

import re
import sys
import threading
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, MutableSequence, Sequence

# status codes returned by every gate entry point
OK = 0
UNKNOWN_JOB = 1
STAGE_ORDER = 2
BUFFER_TOO_SMALL = 3
MALFORMED_PAYLOAD = 4
NOT_INITIALIZED = 5
COMPUTE_FAILED = 6

STATUS_NAMES = {
    OK: "ok",
    UNKNOWN_JOB: "unknown job",
    STAGE_ORDER: "stage-order violation",
    BUFFER_TOO_SMALL: "buffer too small",
    MALFORMED_PAYLOAD: "malformed payload",
    NOT_INITIALIZED: "gate not initialized",
    COMPUTE_FAILED: "computation failure",
}

STAGE_INITIALIZE = 0
STAGE_COMPUTE = 1
STAGE_RETRIEVE = 2
STAGE_OUTPUT_SIZE = 3

_SERVICE_NAME_RE = re.compile(r"[a-z][a-z0-9_]*\Z")

Handler = Callable[[list[int]], list[int]]


class PayloadError(Exception):
    """Raised by a handler that rejects its input (maps to status 4)."""


class ComputeError(Exception):
    """Raised by a handler whose computation fails (maps to status 6)."""


class GateError(Exception):
    """Nonzero status surfaced by the staged-call helper."""

    def __init__(self, status: int, job: int):
        super().__init__(f"gate_call(job={job}) failed: status {status} ({STATUS_NAMES.get(status, 'reserved')})")
        self.status = status
        self.job = job


def _wrap32(value: int) -> int:
    return ((int(value) + 0x80000000) & 0xFFFFFFFF) - 0x80000000


def trace(job: int, stage: int, verbose: int) -> None:
    """Emit one diagnostic line on stderr when verbose is nonzero."""
    if verbose != 0:
        print(f"-> in gate.handle_jobs job={job} stage={stage}", file=sys.stderr)


@dataclass(frozen=True)
class ServiceDescriptor:
    name: str
    base: int
    stages: int
    compute: Handler

    def __post_init__(self):
        if _SERVICE_NAME_RE.match(self.name) is None:
            raise ValueError(f"invalid service name {self.name!r}")
        if self.base < 0 or self.base % 10 != 0:
            raise ValueError(f"service base must be a non-negative multiple of 10, got {self.base}")
        if not 1 <= self.stages <= 4:
            raise ValueError(f"service stage count must be in [1, 4], got {self.stages}")


class _Marker(Enum):
    IDLE = "idle"
    INITIALIZED = "initialized"
    COMPUTED = "computed"


@dataclass
class _Session:
    marker: _Marker = _Marker.IDLE
    input: list[int] = field(default_factory=list)
    output: list[int] = field(default_factory=list)

    def reset(self) -> None:
        self.marker = _Marker.IDLE
        self.input = []
        self.output = []


class Gate:
    """Owns the service registry, per-service sessions, and the lifecycle flag.

    All entry points serialize on one lock, so concurrent callers are safe.
    """

    def __init__(self, services: Sequence[ServiceDescriptor] = ()):
        self._lock = threading.Lock()
        self._services: dict[int, ServiceDescriptor] = {}
        self._sessions: dict[int, _Session] = {}
        self._initialized = False
        for descriptor in services:
            self.register_service(descriptor)

    @property
    def services(self) -> tuple[ServiceDescriptor, ...]:
        return tuple(self._services[base] for base in sorted(self._services))

    def register_service(self, descriptor: ServiceDescriptor) -> None:
        if self._initialized:
            raise RuntimeError("cannot register services on an initialized gate")
        if descriptor.base in self._services:
            raise ValueError(f"duplicate service base {descriptor.base}")
        self._services[descriptor.base] = descriptor
        self._sessions[descriptor.base] = _Session()

    def gate_init(self) -> int:
        with self._lock:
            if not self._initialized:
                for session in self._sessions.values():
                    session.reset()
                self._initialized = True
            return OK

    def gate_final(self) -> int:
        with self._lock:
            for session in self._sessions.values():
                session.reset()
            self._initialized = False
            return OK

    def gate_call(self, job: int, size: int, data: MutableSequence[int], verbose: int = 0) -> int:
        base = int(job / 10) * 10  # truncate toward zero, like C integer division
        stage = job - base
        trace(job, stage, verbose)
        with self._lock:
            if not self._initialized:
                return NOT_INITIALIZED
            if job < 0:
                return UNKNOWN_JOB
            service = self._services.get(base)
            if service is None or stage >= service.stages:
                return UNKNOWN_JOB
            if size < 0 or size > len(data):
                return MALFORMED_PAYLOAD
            session = self._sessions[base]

            if stage == STAGE_INITIALIZE:
                if session.marker is _Marker.INITIALIZED:
                    return STAGE_ORDER
                session.input = [_wrap32(data[i]) for i in range(size)]
                session.output = []
                session.marker = _Marker.INITIALIZED
                return OK

            if stage == STAGE_COMPUTE:
                if session.marker is not _Marker.INITIALIZED:
                    return STAGE_ORDER
                try:
                    output = service.compute(list(session.input))
                except PayloadError:
                    return MALFORMED_PAYLOAD
                except ComputeError:
                    return COMPUTE_FAILED
                session.output = [_wrap32(v) for v in output]
                session.marker = _Marker.COMPUTED
                return OK

            # retrieve and output-size require a computed session
            if session.marker is not _Marker.COMPUTED:
                return STAGE_ORDER

            if stage == STAGE_RETRIEVE:
                count = min(size, len(session.output))
                for i in range(count):
                    data[i] = session.output[i]
                return BUFFER_TOO_SMALL if size < len(session.output) else OK

            # STAGE_OUTPUT_SIZE
            if size < 1:
                return BUFFER_TOO_SMALL
            data[0] = len(session.output)
            return OK


def call_staged(gate: Gate, base: int, payload: Sequence[int], verbose: int = 0) -> list[int]:
    """Drive one full service cycle: initialize, compute, output-size, retrieve.

    Raises GateError on the first nonzero status.
    """

    def step(job: int, size: int, buffer: MutableSequence[int]) -> None:
        status = gate.gate_call(job, size, buffer, verbose)
        if status != OK:
            raise GateError(status, job)

    step(base + STAGE_INITIALIZE, len(payload), list(payload))
    step(base + STAGE_COMPUTE, 0, [])
    size_buffer = [0]
    step(base + STAGE_OUTPUT_SIZE, 1, size_buffer)
    output = [0] * size_buffer[0]
    step(base + STAGE_RETRIEVE, len(output), output)
    return output
