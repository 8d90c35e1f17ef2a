"""Constants for matroid move computations."""

from matroid_moves.constants.catalogue import (
    NAMED_MATROIDS,
    MatroidDefinition,
    catalogue_names,
    lookup_definition,
)
from matroid_moves.constants.defaults import (
    CLOSURE_CACHE_SIZE,
    DEFAULT_WITNESS_SEED,
    DEFAULT_WITNESS_TRIES,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFICATION_FAILED,
    MAX_RANK,
    WITNESS_RANK,
)

__all__ = [
    "CLOSURE_CACHE_SIZE",
    "DEFAULT_WITNESS_SEED",
    "DEFAULT_WITNESS_TRIES",
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_VERIFICATION_FAILED",
    "MAX_RANK",
    "NAMED_MATROIDS",
    "MatroidDefinition",
    "WITNESS_RANK",
    "catalogue_names",
    "lookup_definition",
]
