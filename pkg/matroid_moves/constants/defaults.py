"""Fixed limits and documented defaults."""

# Largest supported rank; elements then fit in 32-bit indices
MAX_RANK = 31

# Entries kept by the closure LRU cache
CLOSURE_CACHE_SIZE = 1 << 16

# Witness sampling uses numpy's default bit generator, seeded directly.
# numpy.random.default_rng(seed) -> PCG64 seeded through SeedSequence(seed);
# each try draws rng.integers(0, 2, size=n, dtype=uint8), index i = element i+1.
DEFAULT_WITNESS_SEED = 1
DEFAULT_WITNESS_TRIES = 50

# Rank used by the unreachability acceptance run
WITNESS_RANK = 8

# CLI exit codes
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
