"""Line-based service manifest: parser and canonical printer.

Grammar (one directive per line, `#` starts a comment, blank lines ignored):

    library <name>
    version <MAJOR.MINOR.PATCH> <YYYY-MM-DD>
    service <name> base <int> stages <int>

Exactly one library line and one version line are required, plus at least one
service line.  Bases must be pairwise-distinct non-negative multiples of 10;
stage counts lie in [1, 4]; names match [a-z][a-z0-9_]*.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

_NAME_RE = re.compile(r"[a-z][a-z0-9_]*\Z")
_VERSION_RE = re.compile(r"[0-9]+\.[0-9]+\.[0-9]+\Z")
_DATE_RE = re.compile(r"[0-9]{4}-[0-9]{2}-[0-9]{2}\Z")


class ManifestError(ValueError):
    """Manifest text is malformed; the message carries the offending line."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class ServiceEntry:
    name: str
    base: int
    stages: int


@dataclass(frozen=True)
class Manifest:
    library_name: str
    version: str
    release_date: str
    services: tuple[ServiceEntry, ...]


def _parse_int(token: str, what: str, line: int) -> int:
    try:
        return int(token, 10)
    except ValueError:
        raise ManifestError(f"{what} must be an integer, got {token!r}", line) from None


def _parse_service(tokens: list[str], line: int) -> ServiceEntry:
    if len(tokens) != 6 or tokens[2] != "base" or tokens[4] != "stages":
        raise ManifestError("expected 'service <name> base <int> stages <int>'", line)
    name = tokens[1]
    if _NAME_RE.match(name) is None:
        raise ManifestError(f"invalid service name {name!r}", line)
    base = _parse_int(tokens[3], "service base", line)
    stages = _parse_int(tokens[5], "stage count", line)
    if base < 0 or base % 10 != 0:
        raise ManifestError(f"service base must be a non-negative multiple of 10, got {base}", line)
    if not 1 <= stages <= 4:
        raise ManifestError(f"stage count must be in [1, 4], got {stages}", line)
    return ServiceEntry(name, base, stages)


def parse_manifest(text: str) -> Manifest:
    library_name: str | None = None
    version: str | None = None
    release_date: str | None = None
    services: list[ServiceEntry] = []
    seen_bases: dict[int, int] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        keyword = tokens[0]
        if keyword == "library":
            if library_name is not None:
                raise ManifestError("duplicate 'library' directive", lineno)
            if len(tokens) != 2:
                raise ManifestError("expected 'library <name>'", lineno)
            if _NAME_RE.match(tokens[1]) is None:
                raise ManifestError(f"invalid library name {tokens[1]!r}", lineno)
            library_name = tokens[1]
        elif keyword == "version":
            if version is not None:
                raise ManifestError("duplicate 'version' directive", lineno)
            if len(tokens) != 3:
                raise ManifestError("expected 'version <MAJOR.MINOR.PATCH> <YYYY-MM-DD>'", lineno)
            if _VERSION_RE.match(tokens[1]) is None:
                raise ManifestError(f"invalid version {tokens[1]!r}", lineno)
            if _DATE_RE.match(tokens[2]) is None:
                raise ManifestError(f"invalid release date {tokens[2]!r}", lineno)
            version, release_date = tokens[1], tokens[2]
        elif keyword == "service":
            entry = _parse_service(tokens, lineno)
            if entry.base in seen_bases:
                raise ManifestError(
                    f"duplicate service base {entry.base} (first used on line {seen_bases[entry.base]})",
                    lineno,
                )
            seen_bases[entry.base] = lineno
            services.append(entry)
        else:
            raise ManifestError(f"unknown directive {keyword!r}", lineno)

    if library_name is None:
        raise ManifestError("missing required 'library' directive")
    if version is None or release_date is None:
        raise ManifestError("missing required 'version' directive")
    if not services:
        raise ManifestError("at least one 'service' directive is required")
    return Manifest(library_name, version, release_date, tuple(services))


def format_manifest(manifest: Manifest) -> str:
    """Canonical form; parse(format(m)) == m and format is a parser fixed point."""
    lines = [
        f"library {manifest.library_name}",
        f"version {manifest.version} {manifest.release_date}",
    ]
    for service in manifest.services:
        lines.append(f"service {service.name} base {service.base} stages {service.stages}")
    return "\n".join(lines) + "\n"
