"""Client bindings for the libjobgate shared library,
version 1.0.0 released 2026-08-26.

Generated by the binding generator; do not edit by hand.
"""

import ctypes
import os
import sys

LIBRARY_NAME = "jobgate"
LIBRARY_ENV = "JOBGATE_LIBRARY"

STAGE_INITIALIZE = 0
STAGE_COMPUTE = 1
STAGE_RETRIEVE = 2
STAGE_OUTPUT_SIZE = 3


class GateClientError(RuntimeError):
    def __init__(self, job, status):
        super().__init__("gate_call(job=%d) failed with status %d" % (job, status))
        self.job = job
        self.status = status


def _shared_extension():
    if sys.platform == "darwin":
        return ".dylib"
    if sys.platform in ("win32", "cygwin"):
        return ".dll"
    return ".so"


def _library_path():
    override = os.environ.get(LIBRARY_ENV)
    if override:
        return override
    here = os.path.dirname(os.path.abspath(__file__))
    return os.path.join(here, "lib" + LIBRARY_NAME + _shared_extension())


_lib = None


def _gate():
    global _lib
    if _lib is None:
        lib = ctypes.CDLL(_library_path())
        lib.gate_init.restype = ctypes.c_int32
        lib.gate_init.argtypes = ()
        lib.gate_final.restype = ctypes.c_int32
        lib.gate_final.argtypes = ()
        lib.gate_call.restype = ctypes.c_int32
        lib.gate_call.argtypes = (
            ctypes.c_int32,
            ctypes.c_int32,
            ctypes.POINTER(ctypes.c_int32),
            ctypes.c_int32,
        )
        status = lib.gate_init()
        if status != 0:
            raise GateClientError(-1, status)
        _lib = lib
    return _lib


def _call(job, size, buffer, verbose):
    status = _gate().gate_call(job, size, buffer, verbose)
    if status != 0:
        raise GateClientError(job, status)


def _call_service(base, text, verbose=0):
    data = (ctypes.c_int32 * max(len(text), 1))(*[ord(ch) for ch in text])
    _call(base + STAGE_INITIALIZE, len(text), data, verbose)
    _call(base + STAGE_COMPUTE, 0, data, verbose)
    size = (ctypes.c_int32 * 1)()
    _call(base + STAGE_OUTPUT_SIZE, 1, size, verbose)
    out = (ctypes.c_int32 * max(size[0], 1))()
    _call(base + STAGE_RETRIEVE, size[0], out, verbose)
    return "".join(chr(v) for v in out[: size[0]])


SWAP_BASE = 0


def swap(text, verbose=0):
    """swap service: jobs 0-3."""
    return _call_service(SWAP_BASE, text, verbose)


VERSION_BASE = 40


def version(text, verbose=0):
    """version service: jobs 40-43."""
    return _call_service(VERSION_BASE, text, verbose)


POLYROOTS_BASE = 50


def polyroots(text, verbose=0):
    """polyroots service: jobs 50-53."""
    return _call_service(POLYROOTS_BASE, text, verbose)
