"""Command line front.

Binding-generator subcommands (check, header, stub) run locally on manifest
files.  Gate subcommands (swap, version, polyroots, call) are thin clients of
a running HTTP front; start one with `jobgate serve`.

Exit codes: 0 success, 1 user error, 2 internal error.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from pathlib import Path

from .bindgen import DIALECTS, ManifestError, emit_client_stub, emit_header, parse_manifest

DEFAULT_URL = "http://127.0.0.1:8000"

EXIT_OK = 0
EXIT_USER_ERROR = 1
EXIT_INTERNAL_ERROR = 2


class UserError(Exception):
    pass


def _read_manifest(path: str):
    source = Path(path)
    try:
        text = source.read_text(encoding="utf-8")
    except OSError as exc:
        raise UserError(f"cannot read manifest {path}: {exc.strerror or exc}") from exc
    try:
        return parse_manifest(text)
    except ManifestError as exc:
        raise UserError(f"{path}: {exc}") from exc


def _write_atomic(path: str, text: str) -> None:
    target = Path(path)
    directory = target.parent if str(target.parent) else Path(".")
    try:
        fd, temp_name = tempfile.mkstemp(dir=directory, prefix=target.name + ".", suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
                handle.write(text)
            os.replace(temp_name, target)
        except BaseException:
            os.unlink(temp_name)
            raise
    except OSError as exc:
        raise UserError(f"cannot write {path}: {exc.strerror or exc}") from exc


def _cmd_check(args) -> int:
    manifest = _read_manifest(args.manifest)
    print(f"library {manifest.library_name} version {manifest.version} released {manifest.release_date}")
    print(f"{len(manifest.services)} service(s):")
    for service in manifest.services:
        print(f"  {service.name}: base {service.base}, stages {service.stages}")
    return EXIT_OK


def _cmd_header(args) -> int:
    manifest = _read_manifest(args.manifest)
    _write_atomic(args.output, emit_header(manifest))
    return EXIT_OK


def _cmd_stub(args) -> int:
    manifest = _read_manifest(args.manifest)
    try:
        text = emit_client_stub(manifest, args.dialect)
    except ValueError as exc:
        raise UserError(str(exc)) from exc
    _write_atomic(args.output, text)
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("jobgate.server.app:app", host=args.host, port=args.port, log_level="info")
    return EXIT_OK


def _request(args, method: str, path: str, json_body=None):
    import httpx

    url = args.url.rstrip("/") + path
    try:
        response = httpx.request(method, url, json=json_body, timeout=30.0)
    except httpx.HTTPError as exc:
        raise UserError(f"cannot reach gate service at {args.url}: {exc}") from exc
    if response.status_code >= 400:
        raise UserError(f"{url} -> HTTP {response.status_code}: {response.text}")
    return response.json()


def _cmd_swap(args) -> int:
    body = _request(args, "POST", "/services/swap", {"text": args.text, "verbose": int(args.verbose)})
    print(body["text"])
    return EXIT_OK


def _cmd_version(args) -> int:
    body = _request(args, "GET", "/services/version")
    print(body["version"])
    return EXIT_OK


def _cmd_polyroots(args) -> int:
    body = _request(
        args,
        "POST",
        "/services/polyroots",
        {"coefficients": args.coefficients, "verbose": int(args.verbose)},
    )
    for root in body["roots"]:
        print(f"{root['real']} {root['imag']}")
    return EXIT_OK


def _cmd_call(args) -> int:
    body = _request(
        args,
        "POST",
        "/gate/call",
        {"job": args.job, "data": args.data, "size": args.size, "verbose": int(args.verbose)},
    )
    print(f"status {body['status']}")
    print(" ".join(str(v) for v in body["data"]))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jobgate", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="parse a manifest and print a summary")
    p.add_argument("manifest")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("header", help="emit the C header for a manifest")
    p.add_argument("manifest")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(handler=_cmd_header)

    p = sub.add_parser("stub", help="emit a client stub for a manifest")
    p.add_argument("manifest")
    p.add_argument("--dialect", required=True, help=f"one of: {', '.join(DIALECTS)}")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(handler=_cmd_stub)

    p = sub.add_parser("serve", help="run the HTTP front")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(handler=_cmd_serve)

    def add_client(name, help_text):
        q = sub.add_parser(name, help=help_text)
        q.add_argument("--url", default=DEFAULT_URL)
        q.add_argument("-v", "--verbose", action="store_true")
        return q

    p = add_client("swap", "reverse a text through the gate")
    p.add_argument("text")
    p.set_defaults(handler=_cmd_swap)

    p = add_client("version", "print the library version line")
    p.set_defaults(handler=_cmd_version)

    p = add_client("polyroots", "roots of a polynomial, coefficients in ascending order")
    p.add_argument("coefficients", nargs="+", type=float)
    p.set_defaults(handler=_cmd_polyroots)

    p = add_client("call", "raw gate_call with an integer buffer")
    p.add_argument("job", type=int)
    p.add_argument("data", nargs="*", type=int)
    p.add_argument("--size", type=int, default=None)
    p.set_defaults(handler=_cmd_call)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except UserError as exc:
        print(f"jobgate: {exc}", file=sys.stderr)
        return EXIT_USER_ERROR
    except KeyboardInterrupt:
        return EXIT_USER_ERROR
    except Exception as exc:  # noqa: BLE001 - last-resort diagnostic
        print(f"jobgate: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
