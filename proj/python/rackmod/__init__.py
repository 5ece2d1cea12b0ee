"""Finite racks, crossed modules of racks and their invariants."""

from ._core import (
    MalformedInput,
    PreconditionError,
    Rack,
    ResourceError,
    ValidationError,
    abelianization,
    betti_numbers,
    conj_rack,
    count_colorings,
    enumerate_racks,
    named_rack,
    orbits,
    rack_from_json,
    run_cli,
    validate_rack,
    word_equality,
)

__all__ = [
    "MalformedInput",
    "PreconditionError",
    "Rack",
    "ResourceError",
    "ValidationError",
    "abelianization",
    "betti_numbers",
    "conj_rack",
    "count_colorings",
    "enumerate_racks",
    "named_rack",
    "orbits",
    "rack_from_json",
    "run_cli",
    "validate_rack",
    "word_equality",
]
