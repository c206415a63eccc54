"""Job-gate interop toolkit.

One process-wide gate instance backs the module-level entry points, mirroring
the exported-symbol surface of a native build: gate_init, gate_final,
gate_call.  Library users who want isolated registries can build their own
Gate via jobgate.services.build_gate().
"""

from __future__ import annotations

from typing import MutableSequence

from ._version import RELEASE_DATE, VERSION_LINE, __version__
from .gate import (
    BUFFER_TOO_SMALL,
    COMPUTE_FAILED,
    MALFORMED_PAYLOAD,
    NOT_INITIALIZED,
    OK,
    STAGE_ORDER,
    UNKNOWN_JOB,
    ComputeError,
    Gate,
    GateError,
    PayloadError,
    ServiceDescriptor,
    call_staged,
)
from .services import POLYROOTS_BASE, SWAP_BASE, VERSION_BASE, build_gate

GATE = build_gate()


def gate_init() -> int:
    return GATE.gate_init()


def gate_final() -> int:
    return GATE.gate_final()


def gate_call(job: int, size: int, data: MutableSequence[int], verbose: int = 0) -> int:
    return GATE.gate_call(job, size, data, verbose)


__all__ = [
    "__version__",
    "RELEASE_DATE",
    "VERSION_LINE",
    "OK",
    "UNKNOWN_JOB",
    "STAGE_ORDER",
    "BUFFER_TOO_SMALL",
    "MALFORMED_PAYLOAD",
    "NOT_INITIALIZED",
    "COMPUTE_FAILED",
    "Gate",
    "GateError",
    "PayloadError",
    "ComputeError",
    "ServiceDescriptor",
    "call_staged",
    "build_gate",
    "GATE",
    "gate_init",
    "gate_final",
    "gate_call",
    "SWAP_BASE",
    "VERSION_BASE",
    "POLYROOTS_BASE",
]
