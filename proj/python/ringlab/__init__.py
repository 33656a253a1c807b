"""Python access to the ringlab finite-ring library."""

from ._ringlab import (
    ConstructionError,
    ParseError,
    PreconditionError,
    Ring,
    RingError,
    UnsupportedError,
    canonical,
    integer_index,
    parse_ring,
    run,
    strongly_clean_index,
    u_n_set,
    witness,
)

__all__ = [
    "ConstructionError",
    "ParseError",
    "PreconditionError",
    "Ring",
    "RingError",
    "UnsupportedError",
    "canonical",
    "integer_index",
    "parse_ring",
    "run",
    "strongly_clean_index",
    "u_n_set",
    "witness",
]
