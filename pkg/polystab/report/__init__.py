from .emit import COLUMNS, RunConfig, build_document, canonical_json, content_digest, emit, render, schema_name
from .manifest import KnownDiscrepancies, load_manifest

__all__ = [
    "COLUMNS",
    "KnownDiscrepancies",
    "RunConfig",
    "build_document",
    "canonical_json",
    "content_digest",
    "emit",
    "load_manifest",
    "render",
    "schema_name",
]
