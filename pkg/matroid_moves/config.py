"""Configuration for matroid move computations.

This module provides the configuration dataclass holding search budgets,
sampling defaults and cache sizes shared by the orbit, property and
synthesis modules.
"""

import os
from dataclasses import dataclass, fields
from typing import Optional

from matroid_moves.constants.defaults import DEFAULT_WITNESS_SEED, DEFAULT_WITNESS_TRIES
from matroid_moves.errors import ConfigError

ENV_PREFIX = "MATROID_MOVES_"


@dataclass
class MovesConfig:
    """Configuration for matroid move computations.

    Attributes:
        witness_seed: Default seed for Property 1 witness sampling (default: 1)
        witness_max_tries: Colourings tried before giving up (default: 50)
        orbit_budget: Maximum visited states per orbit search (default: None, unbounded)
        max_orbit_rank: Largest rank allowed for unbudgeted orbit searches (default: 4)
        max_canonical_rank: Largest rank accepted by canonical_form (default: 5)
        log_level: Logging level used by the command-line interface (default: WARNING)

    Examples:
        >>> config = MovesConfig()
        >>> config.witness_max_tries
        50

        >>> config = MovesConfig(orbit_budget=100000, max_orbit_rank=5)
        >>> config.orbit_budget
        100000
    """

    witness_seed: int = DEFAULT_WITNESS_SEED
    witness_max_tries: int = DEFAULT_WITNESS_TRIES
    orbit_budget: Optional[int] = None
    max_orbit_rank: int = 4
    max_canonical_rank: int = 5
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls) -> "MovesConfig":
        """Build a config from MATROID_MOVES_<FIELD> environment variables.

        Unset variables keep their defaults.

        Raises:
            ConfigError: If an integer field holds a non-integer value
        """
        values = {}
        for field in fields(cls):
            raw = os.getenv(f"{ENV_PREFIX}{field.name.upper()}")
            if raw is None or raw == "":
                continue
            if field.name == "log_level":
                values[field.name] = raw.upper()
                continue
            try:
                values[field.name] = int(raw)
            except ValueError as e:
                raise ConfigError(
                    f"{ENV_PREFIX}{field.name.upper()} must be an integer, got {raw!r}"
                ) from e
        return cls(**values)


_config = MovesConfig()


def get_config() -> MovesConfig:
    """Return the process-wide configuration."""
    return _config


def set_config(config: MovesConfig) -> None:
    """Replace the process-wide configuration."""
    global _config
    _config = config
