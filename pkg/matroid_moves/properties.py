"""Property 1 / Property 2 checks and unreachability certificates.

A colouring has Property 2 when every projective cocircuit splits into a
spanning green half and a spanning red half. Property 2 survives
complementation and switching of a Property 1 colouring, and local
complementation of a Property 2 colouring collapses to omega sigma_a, so no
word in the three operations links such a colouring to P_r, which fails
Property 2 outright. Random colourings have Property 1 with positive
probability once r >= 8.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

from matroid_moves.config import get_config
from matroid_moves.errors import CertificateRefused, DomainError, InternalError
from matroid_moves.matroid_state import Matroid
from matroid_moves.models.properties import (
    Certificate,
    CertificateRow,
    Property1Result,
    Property2Result,
    PropertyReport,
)
from matroid_moves.moves import lambda_mask, omega_mask, sigma_mask
from matroid_moves.projective_space import (
    Space,
    affine_subgeometry_formula,
    cocircuit_mask,
    rank_of_mask,
)
from matroid_moves.utils.bits import mask_from_bits

logger = logging.getLogger(__name__)


def cocircuit_difference(space: Space, a: int, b: int) -> int:
    """Membership word of C*(a) - C*(b), a copy of AG(r-2,2)."""
    if a == b:
        raise DomainError(f"Cocircuits must be distinct, got a=b={a}")
    return cocircuit_mask(space.r, space.check_functional(a)) & ~cocircuit_mask(
        space.r, space.check_functional(b)
    )


def _property1_failure(r: int, mask: int, diff: int) -> Optional[Tuple[str, int]]:
    green = rank_of_mask(diff & mask, limit=r - 1)
    if green < r - 1:
        return "green", green
    red = rank_of_mask(diff & ~mask, limit=r - 1)
    if red < r - 1:
        return "red", red
    return None


def has_property1(M: Matroid) -> Property1Result:
    """Check Property 1 over every pair of distinct cocircuits.

    Pairs are scanned in lexicographic order (a < b) and both differences
    C*(a) - C*(b) and C*(b) - C*(a) are tested; the first failure is reported
    as the ordered pair whose difference failed.

    Raises:
        DomainError: If r < 2
    """
    r = M.r
    if r < 2:
        raise DomainError(f"Property 1 needs r >= 2, got r={r}")
    n = M.space.n
    cocircuits = [0] + [cocircuit_mask(r, a) for a in range(1, n + 1)]
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            for first, second in ((a, b), (b, a)):
                diff = cocircuits[first] & ~cocircuits[second]
                failure = _property1_failure(r, M.mask, diff)
                if failure is not None:
                    side, found = failure
                    return Property1Result(
                        holds=False, failing_pair=(first, second), side=side, rank=found
                    )
    return Property1Result(holds=True)


def _property2_mask(r: int, mask: int) -> Property2Result:
    for a in range(1, 1 << r):
        coc = cocircuit_mask(r, a)
        green = rank_of_mask(coc & mask, limit=r)
        if green < r:
            return Property2Result(holds=False, failing_functional=a, side="green", rank=green)
        red = rank_of_mask(coc & ~mask, limit=r)
        if red < r:
            return Property2Result(holds=False, failing_functional=a, side="red", rank=red)
    return Property2Result(holds=True)


def has_property2(M: Matroid) -> Property2Result:
    """Check that every cocircuit meets both colour classes in a spanning set.

    Examples:
        >>> has_property2(Matroid.full(Space(3))).holds
        False
    """
    return _property2_mask(M.r, M.mask)


def check_properties(M: Matroid) -> PropertyReport:
    """Both property checks together.

    Raises:
        InternalError: If Property 1 holds while Property 2 fails
    """
    property1 = has_property1(M)
    property2 = has_property2(M)
    if property1.holds and not property2.holds:
        raise InternalError(
            f"{M.mask:x} has Property 1 but fails Property 2 at a={property2.failing_functional}"
        )
    return PropertyReport(r=M.r, mask=M.mask, property1=property1, property2=property2)


# =============================================================================
# Counting bound
# =============================================================================


@dataclass(frozen=True)
class BadColouringBound:
    """Upper bounds on colourings with a monochromatic AG(r-3,2).

    Attributes:
        r: Rank of the ambient geometry
        count: Bound on the number of bad colourings
        probability: count / 2^(2^r - 1), exact
    """

    r: int
    count: int
    probability: Fraction

    @property
    def probability_float(self) -> float:
        return float(self.probability)

    @property
    def below_one(self) -> bool:
        return self.probability < 1


def bad_colouring_bound(r: int) -> BadColouringBound:
    """Bound the colourings of P_r that fail Property 1.

    A colouring is bad exactly when some copy of AG(r-3,2) is monochromatic;
    there are 2 colours, (2^r-1)(2^(r-1)-1)(2^(r-2)-1)/3 copies, and
    2^(2^r - 1 - 2^(r-3)) ways to colour the rest.

    Raises:
        DomainError: If r < 3

    Examples:
        >>> bad_colouring_bound(8).below_one
        True
        >>> bad_colouring_bound(7).below_one
        False
    """
    if r < 3:
        raise DomainError(f"The colouring bound needs r >= 3, got r={r}")
    n = (1 << r) - 1
    copies = affine_subgeometry_formula(r)
    count = 2 * copies * (1 << (n - (1 << (r - 3))))
    probability = Fraction(count, 1 << n)
    return BadColouringBound(r=r, count=count, probability=probability)


# =============================================================================
# Witness sampling
# =============================================================================


def sample_colouring(space: Space, rng: np.random.Generator) -> int:
    """Draw a uniform colouring; index i of the draw colours element i+1."""
    bits = rng.integers(0, 2, size=space.n, dtype=np.uint8)
    return mask_from_bits(bits)


def sample_property1_witness(
    space: Space, seed: Optional[int] = None, max_tries: Optional[int] = None
) -> Optional[Matroid]:
    """Sample colourings until one has Property 1.

    Args:
        space: The ambient geometry (r >= 3)
        seed: Seed for numpy.random.default_rng (default from config)
        max_tries: Colourings to try (default from config)

    Returns:
        The first witness found, or None after max_tries failures

    Raises:
        DomainError: If r < 3 or max_tries < 1
    """
    if space.r < 3:
        raise DomainError(f"Witness sampling needs r >= 3, got r={space.r}")
    config = get_config()
    seed = config.witness_seed if seed is None else seed
    max_tries = config.witness_max_tries if max_tries is None else max_tries
    if max_tries < 1:
        raise DomainError(f"max_tries must be positive, got {max_tries}")

    rng = np.random.default_rng(seed)
    for attempt in range(1, max_tries + 1):
        M = Matroid.from_mask(space, sample_colouring(space, rng))
        result = has_property1(M)
        if result.holds:
            logger.info(f"Property 1 witness for P_{space.r} found on try {attempt} (seed {seed})")
            return M
        logger.debug(
            f"Try {attempt}: pair {result.failing_pair} fails on the {result.side} side"
        )
    logger.info(f"No Property 1 witness for P_{space.r} in {max_tries} tries (seed {seed})")
    return None


# =============================================================================
# Certificates
# =============================================================================


def certify_unreachable(M: Matroid) -> Certificate:
    """Certify that no omega/sigma/lambda word takes P_r to M.

    Checks that omega(M) and every sigma_a(M) have Property 2, that every
    lambda_a(M) equals omega sigma_a(M) and has Property 2, and that P_r fails
    Property 2.

    Raises:
        DomainError: If M fails Property 2
        CertificateRefused: If a sub-check fails, with a counterexample
    """
    r = M.r
    own = has_property2(M)
    if not own.holds:
        raise DomainError(
            f"{M.mask:x} fails Property 2 at a={own.failing_functional}; nothing to certify"
        )

    omega_image = omega_mask(r, M.mask)
    if not _property2_mask(r, omega_image).holds:
        raise CertificateRefused(
            "omega(M) fails Property 2", check="omega", counterexample={"mask": omega_image}
        )

    rows = []
    for a in M.space.elements():
        coc = cocircuit_mask(r, a)
        sigma_image = sigma_mask(r, M.mask, a)
        lambda_image = lambda_mask(r, M.mask, a)
        row = CertificateRow(
            a=a,
            green_rank=rank_of_mask(coc & M.mask, limit=r),
            red_rank=rank_of_mask(coc & ~M.mask, limit=r),
            sigma_p2=_property2_mask(r, sigma_image).holds,
            lambda_eq=lambda_image == omega_mask(r, sigma_image),
            lambda_p2=_property2_mask(r, lambda_image).holds,
        )
        if not (row.sigma_p2 and row.lambda_eq and row.lambda_p2):
            check = "sigma" if not row.sigma_p2 else ("lambda_eq" if not row.lambda_eq else "lambda")
            raise CertificateRefused(
                f"Check {check} fails at a={a}",
                check=check,
                counterexample={"a": a, "sigma": sigma_image, "lambda": lambda_image},
            )
        rows.append(row)

    full = _property2_mask(r, M.space.full_mask)
    if full.holds:
        raise CertificateRefused("P_r satisfies Property 2", check="full")

    logger.info(f"Certificate issued for {M.mask:x} in P_{r}")
    return Certificate(
        r=r,
        witness=M.mask,
        omega_p2=True,
        full_fails_p2=True,
        full_failing_functional=full.failing_functional,
        rows=rows,
    )


def verify_certificate(cert: Certificate) -> bool:
    """Recompute a certificate from its witness and compare every entry."""
    try:
        space = Space(cert.r)
        M = Matroid.from_mask(space, cert.witness)
        recomputed = certify_unreachable(M)
    except (DomainError, CertificateRefused) as e:
        logger.warning(f"Certificate does not verify: {e}")
        return False
    if recomputed != cert:
        logger.warning("Certificate entries differ from the recomputation")
        return False
    return cert.valid
