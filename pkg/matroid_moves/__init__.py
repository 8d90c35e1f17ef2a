"""Binary Matroid Moves

A Python library for moving between restrictions of the binary projective
geometry P_r = PG(r-1, 2).

This library provides:
- Points, functionals, cocircuits, hyperplanes, rank and closure of P_r
- Restriction states with GL(r,2) canonical forms
- Complementation, switching, local complementation and pointed swaps
- Breadth-first orbit and reachability search with replayable paths
- Property 1 / Property 2 checks and unreachability certificates
- Constructive move-sequence synthesis
- Text formats for states, sequences and certificates
- Configuration management
"""

__version__ = "0.1.0"

# Configuration
from matroid_moves.config import MovesConfig, get_config, set_config

# Constants
from matroid_moves.constants.catalogue import NAMED_MATROIDS, catalogue_names

# Errors
from matroid_moves.errors import (
    BudgetExhaustedError,
    CertificateRefused,
    ConfigError,
    DomainError,
    FormatError,
    IndeterminateError,
    InternalError,
    MatroidMovesError,
    ReplayError,
    UnsupportedError,
)

# Text formats
from matroid_moves.formats import (
    format_certificate,
    format_matroid,
    format_sequence,
    parse_certificate,
    parse_matroid,
    parse_sequence_file,
    parse_state_spec,
)

# Restriction states
from matroid_moves.matroid_state import (
    LinearMap,
    Matroid,
    are_isomorphic,
    canonical_form,
    coloops,
    find_cocircuit_with_trace,
    named_matroid,
)

# Data models
from matroid_moves.models import (
    Certificate,
    CoverageReport,
    Move,
    MoveKind,
    MoveSequence,
    PropertyReport,
    SwapKind,
    SynthesisResult,
)

# Operations
from matroid_moves.moves import (
    apply_hyperplane_complement,
    apply_lambda,
    apply_move,
    apply_omega,
    apply_pointed_swap,
    apply_sigma,
    normalize_sigma_omega,
    omega_as_three_hyperplanes,
    replay,
    replay_with_trajectory,
)

# Orbits
from matroid_moves.orbit_engine import (
    GeneratorSet,
    OrbitTable,
    coverage_report,
    orbit,
    reachable,
)

# Geometry
from matroid_moves.projective_space import (
    Functional,
    GroundSet,
    Space,
    closure,
    cocircuit,
    hyperplane,
    rank,
)

# Properties
from matroid_moves.properties import (
    bad_colouring_bound,
    certify_unreachable,
    check_properties,
    has_property1,
    has_property2,
    sample_property1_witness,
    verify_certificate,
)

# Synthesis
from matroid_moves.synthesis import (
    synth_full,
    synth_lambda_swap,
    synth_r4_walkthrough,
    synth_same_size,
    synth_single_swap_kind,
    synth_swap_exchange,
)

__all__ = [
    # Configuration
    "MovesConfig",
    "get_config",
    "set_config",
    # Constants
    "NAMED_MATROIDS",
    "catalogue_names",
    # Errors
    "MatroidMovesError",
    "DomainError",
    "UnsupportedError",
    "ConfigError",
    "InternalError",
    "ReplayError",
    "BudgetExhaustedError",
    "IndeterminateError",
    "CertificateRefused",
    "FormatError",
    # Text formats
    "format_certificate",
    "format_matroid",
    "format_sequence",
    "parse_certificate",
    "parse_matroid",
    "parse_sequence_file",
    "parse_state_spec",
    # Geometry
    "Space",
    "GroundSet",
    "Functional",
    "cocircuit",
    "hyperplane",
    "rank",
    "closure",
    # Restriction states
    "Matroid",
    "LinearMap",
    "named_matroid",
    "coloops",
    "find_cocircuit_with_trace",
    "canonical_form",
    "are_isomorphic",
    # Data models
    "Move",
    "MoveKind",
    "MoveSequence",
    "SwapKind",
    "PropertyReport",
    "Certificate",
    "CoverageReport",
    "SynthesisResult",
    # Operations
    "apply_omega",
    "apply_sigma",
    "apply_lambda",
    "apply_hyperplane_complement",
    "apply_pointed_swap",
    "apply_move",
    "replay",
    "replay_with_trajectory",
    "normalize_sigma_omega",
    "omega_as_three_hyperplanes",
    # Orbits
    "GeneratorSet",
    "OrbitTable",
    "orbit",
    "reachable",
    "coverage_report",
    # Properties
    "has_property1",
    "has_property2",
    "check_properties",
    "bad_colouring_bound",
    "sample_property1_witness",
    "certify_unreachable",
    "verify_certificate",
    # Synthesis
    "synth_swap_exchange",
    "synth_same_size",
    "synth_full",
    "synth_single_swap_kind",
    "synth_lambda_swap",
    "synth_r4_walkthrough",
]
