from .manifest import Manifest, ManifestError, ServiceEntry, format_manifest, parse_manifest
from .emit import DIALECTS, emit_client_stub, emit_header

__all__ = [
    "Manifest",
    "ManifestError",
    "ServiceEntry",
    "parse_manifest",
    "format_manifest",
    "emit_header",
    "emit_client_stub",
    "DIALECTS",
]
