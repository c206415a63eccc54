"""Library identity constants shared by the version service and the manifest."""

__version__ = "1.0.0"
RELEASE_DATE = "2026-08-26"
VERSION_LINE = f"JOBGATEv{__version__} released {RELEASE_DATE}"
