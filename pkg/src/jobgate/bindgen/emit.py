"""Deterministic emitters: C header and client stubs from a Manifest.

Every emitter is a pure function of the manifest (no timestamps, no
environment), so identical manifests always yield identical bytes.
"""

from __future__ import annotations

from .manifest import Manifest, ServiceEntry

DIALECTS = ("py", "jl")

_STAGE_LABELS = ("initialize", "compute", "retrieve", "output size")


def _service_comment(service: ServiceEntry) -> list[str]:
    lines = [
        "/*",
        f" * service {service.name}",
        f" *   base {service.base}",
    ]
    for stage in range(service.stages):
        lines.append(f" *   stage {stage}: {_STAGE_LABELS[stage]} (job {service.base + stage})")
    lines.append(" */")
    return lines


def emit_header(manifest: Manifest) -> str:
    guard = f"{manifest.library_name.upper()}_H"
    lines = [
        f"/* C interface of the lib{manifest.library_name} shared library,",
        f" * version {manifest.version} released {manifest.release_date}.",
        " * Generated by the binding generator; do not edit by hand.",
        " */",
        f"#ifndef {guard}",
        f"#define {guard}",
        "",
        "#include <stdint.h>",
        "",
        "#ifdef __cplusplus",
        'extern "C" {',
        "#endif",
        "",
        "int32_t gate_init(void);",
        "int32_t gate_final(void);",
        "int32_t gate_call(int32_t job, int32_t size, int32_t *data, int32_t verbose);",
        "",
    ]
    for service in manifest.services:
        lines.extend(_service_comment(service))
        lines.append("")
    lines.extend(
        [
            "#ifdef __cplusplus",
            "}",
            "#endif",
            "",
            f"#endif /* {guard} */",
        ]
    )
    return "\n".join(lines) + "\n"


def _emit_python_stub(manifest: Manifest) -> str:
    env_var = f"{manifest.library_name.upper()}_LIBRARY"
    lines = [
        f'"""Client bindings for the lib{manifest.library_name} shared library,',
        f"version {manifest.version} released {manifest.release_date}.",
        "",
        "Generated by the binding generator; do not edit by hand.",
        '"""',
        "",
        "import ctypes",
        "import os",
        "import sys",
        "",
        f'LIBRARY_NAME = "{manifest.library_name}"',
        f'LIBRARY_ENV = "{env_var}"',
        "",
        "STAGE_INITIALIZE = 0",
        "STAGE_COMPUTE = 1",
        "STAGE_RETRIEVE = 2",
        "STAGE_OUTPUT_SIZE = 3",
        "",
        "",
        "class GateClientError(RuntimeError):",
        "    def __init__(self, job, status):",
        '        super().__init__("gate_call(job=%d) failed with status %d" % (job, status))',
        "        self.job = job",
        "        self.status = status",
        "",
        "",
        "def _shared_extension():",
        '    if sys.platform == "darwin":',
        '        return ".dylib"',
        '    if sys.platform in ("win32", "cygwin"):',
        '        return ".dll"',
        '    return ".so"',
        "",
        "",
        "def _library_path():",
        "    override = os.environ.get(LIBRARY_ENV)",
        "    if override:",
        "        return override",
        "    here = os.path.dirname(os.path.abspath(__file__))",
        '    return os.path.join(here, "lib" + LIBRARY_NAME + _shared_extension())',
        "",
        "",
        "_lib = None",
        "",
        "",
        "def _gate():",
        "    global _lib",
        "    if _lib is None:",
        "        lib = ctypes.CDLL(_library_path())",
        "        lib.gate_init.restype = ctypes.c_int32",
        "        lib.gate_init.argtypes = ()",
        "        lib.gate_final.restype = ctypes.c_int32",
        "        lib.gate_final.argtypes = ()",
        "        lib.gate_call.restype = ctypes.c_int32",
        "        lib.gate_call.argtypes = (",
        "            ctypes.c_int32,",
        "            ctypes.c_int32,",
        "            ctypes.POINTER(ctypes.c_int32),",
        "            ctypes.c_int32,",
        "        )",
        "        status = lib.gate_init()",
        "        if status != 0:",
        "            raise GateClientError(-1, status)",
        "        _lib = lib",
        "    return _lib",
        "",
        "",
        "def _call(job, size, buffer, verbose):",
        "    status = _gate().gate_call(job, size, buffer, verbose)",
        "    if status != 0:",
        "        raise GateClientError(job, status)",
        "",
        "",
        "def _call_service(base, text, verbose=0):",
        "    data = (ctypes.c_int32 * max(len(text), 1))(*[ord(ch) for ch in text])",
        "    _call(base + STAGE_INITIALIZE, len(text), data, verbose)",
        "    _call(base + STAGE_COMPUTE, 0, data, verbose)",
        "    size = (ctypes.c_int32 * 1)()",
        "    _call(base + STAGE_OUTPUT_SIZE, 1, size, verbose)",
        "    out = (ctypes.c_int32 * max(size[0], 1))()",
        "    _call(base + STAGE_RETRIEVE, size[0], out, verbose)",
        '    return "".join(chr(v) for v in out[: size[0]])',
        "",
    ]
    for service in manifest.services:
        const = f"{service.name.upper()}_BASE"
        lines.extend(["", f"{const} = {service.base}", "", ""])
        if service.stages == 4:
            lines.extend(
                [
                    f"def {service.name}(text, verbose=0):",
                    f'    """{service.name} service: jobs {service.base}-{service.base + 3}."""',
                    f"    return _call_service({const}, text, verbose)",
                    "",
                ]
            )
        else:
            lines.extend(
                [
                    f"# {service.name} exposes stages 0-{service.stages - 1} only;",
                    "# drive it through _call() directly.",
                    "",
                ]
            )
    return "\n".join(lines)


def _emit_julia_stub(manifest: Manifest) -> str:
    env_var = f"{manifest.library_name.upper()}_LIBRARY"
    lines = [
        f"# Client bindings for the lib{manifest.library_name} shared library,",
        f"# version {manifest.version} released {manifest.release_date}.",
        "# Generated by the binding generator; do not edit by hand.",
        "",
        f'const LIBRARY_NAME = "{manifest.library_name}"',
        f'const LIBRARY_ENV = "{env_var}"',
        "",
        "const STAGE_INITIALIZE = 0",
        "const STAGE_COMPUTE = 1",
        "const STAGE_RETRIEVE = 2",
        "const STAGE_OUTPUT_SIZE = 3",
        "",
        "function library_path()",
        "    haskey(ENV, LIBRARY_ENV) && return ENV[LIBRARY_ENV]",
        '    ext = Sys.isapple() ? ".dylib" : Sys.iswindows() ? ".dll" : ".so"',
        '    return joinpath(@__DIR__, "lib" * LIBRARY_NAME * ext)',
        "end",
        "",
        "const LIBRARY = library_path()",
        "",
        "struct GateClientError <: Exception",
        "    job::Int",
        "    status::Int",
        "end",
        "",
        "gate_init() = ccall((:gate_init, LIBRARY), Cint, ())",
        "",
        "gate_final() = ccall((:gate_final, LIBRARY), Cint, ())",
        "",
        "function gate_call(job::Integer, size::Integer, data::Vector{Cint}, verbose::Integer)",
        "    return ccall((:gate_call, LIBRARY), Cint,",
        "                 (Cint, Cint, Ref{Cint}, Cint), job, size, data, verbose)",
        "end",
        "",
        "function check(job, status)",
        "    status == 0 || throw(GateClientError(job, status))",
        "    return nothing",
        "end",
        "",
        "let status = gate_init()",
        "    check(-1, status)",
        "end",
        "",
        "function call_service(base::Integer, text::AbstractString; verbose::Integer = 0)",
        "    data = isempty(text) ? Cint[0] : Cint[Cint(ch) for ch in text]",
        "    check(base + STAGE_INITIALIZE,",
        "          gate_call(base + STAGE_INITIALIZE, length(text), data, verbose))",
        "    check(base + STAGE_COMPUTE, gate_call(base + STAGE_COMPUTE, 0, Cint[0], verbose))",
        "    sizebuf = Cint[0]",
        "    check(base + STAGE_OUTPUT_SIZE, gate_call(base + STAGE_OUTPUT_SIZE, 1, sizebuf, verbose))",
        "    out = zeros(Cint, max(sizebuf[1], 1))",
        "    check(base + STAGE_RETRIEVE, gate_call(base + STAGE_RETRIEVE, sizebuf[1], out, verbose))",
        "    return String(Char.(out[1:sizebuf[1]]))",
        "end",
        "",
    ]
    for service in manifest.services:
        const = f"{service.name.upper()}_BASE"
        lines.extend(["", f"const {const} = {service.base}", ""])
        if service.stages == 4:
            lines.extend(
                [
                    f'"""{service.name} service: jobs {service.base}-{service.base + 3}."""',
                    f"{service.name}(text::AbstractString; verbose::Integer = 0) =",
                    f"    call_service({const}, text; verbose = verbose)",
                    "",
                ]
            )
        else:
            lines.extend(
                [
                    f"# {service.name} exposes stages 0-{service.stages - 1} only;",
                    "# drive it through gate_call directly.",
                    "",
                ]
            )
    return "\n".join(lines)


def emit_client_stub(manifest: Manifest, dialect: str) -> str:
    if dialect == "py":
        return _emit_python_stub(manifest)
    if dialect == "jl":
        return _emit_julia_stub(manifest)
    raise ValueError(f"unsupported dialect: {dialect} (supported: {', '.join(DIALECTS)})")
