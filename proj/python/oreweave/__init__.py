"""Author, validate, harvest and publish OAI-ORE style Resource Maps."""

from ._core import (
    ConflictError,
    EncodingError,
    Error,
    MapStore,
    ParseError,
    ResourceMap,
    StructuralError,
    UnionGraph,
    ValidationError,
    aggregation_path,
    fixture,
    fixture_names,
    harvest,
    parse,
    run_cli,
    sniff_format,
    union_of,
    validate,
)

__all__ = [
    "ConflictError",
    "EncodingError",
    "Error",
    "MapStore",
    "ParseError",
    "ResourceMap",
    "StructuralError",
    "UnionGraph",
    "ValidationError",
    "aggregation_path",
    "fixture",
    "fixture_names",
    "harvest",
    "parse",
    "run_cli",
    "sniff_format",
    "union_of",
    "validate",
]
