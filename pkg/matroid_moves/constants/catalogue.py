"""Catalogue of named matroids and their frozen embeddings in P_r.

Every named matroid is pinned to one labeled set of points so that fixtures
and scripts replay bit-exactly. All embeddings use only points below 2^k for
the smallest k that fits them, so the same labels work in every P_r with
r >= k.

Fixed entries:

    name          rank  points
    U_{0,0}       0     {}
    U_{1,1}       1     {1}
    U_{2,2}       2     {1, 2}
    U_{2,3}       2     {1, 2, 3}
    U_{3,3}       3     {1, 2, 4}
    U_{3,4}       3     {1, 2, 4, 7}
    U_{4,4}       4     {1, 2, 4, 8}
    U_{4,5}       4     {1, 2, 4, 8, 15}
    F_7           3     {1..7}
    M(K_4)        3     {1..6}                  (P_3 minus a point)
    M(K_4\\e)      3     {1..5}                  (P_3 minus two points)
    F_7^*         4     {1,2,4,7,11,13,14}      (cocircuit(15) minus {8})
    F_7+U_{1,1}   4     {3,5,6,8,9,10,12,15}    (hyperplane(15) plus {8})

Parametric families, resolved for any k <= r:

    P_k           k     {1 .. 2^k - 1}          (span of e_1..e_k)
    A_k           k     odd-weight points of P_k (cocircuit(2^k - 1) inside P_k)
    U_{k,k}       k     {e_1, .., e_k}
    U_{k,k+1}     k     {e_1, .., e_k, 2^k - 1}  (k >= 2)
"""

import re
from dataclasses import dataclass
from typing import Dict, Optional, Tuple


@dataclass(frozen=True)
class MatroidDefinition:
    """A named matroid with its frozen embedding."""

    name: str
    rank: int
    elements: Tuple[int, ...]
    description: str = ""


def _weight(x: int) -> int:
    return bin(x).count("1")


def _projective(k: int) -> MatroidDefinition:
    return MatroidDefinition(
        name=f"P_{k}",
        rank=k,
        elements=tuple(range(1, 1 << k)),
        description=f"projective geometry PG({k - 1},2)",
    )


def _affine(k: int) -> MatroidDefinition:
    return MatroidDefinition(
        name=f"A_{k}",
        rank=k,
        elements=tuple(x for x in range(1, 1 << k) if _weight(x) % 2 == 1),
        description=f"affine geometry AG({k - 1},2)",
    )


def _free(k: int) -> MatroidDefinition:
    return MatroidDefinition(
        name=f"U_{{{k},{k}}}",
        rank=k,
        elements=tuple(1 << i for i in range(k)),
        description=f"free matroid on {k} elements",
    )


def _circuit(k: int) -> MatroidDefinition:
    return MatroidDefinition(
        name=f"U_{{{k},{k + 1}}}",
        rank=k,
        elements=tuple(sorted([1 << i for i in range(k)] + [(1 << k) - 1])),
        description=f"circuit on {k + 1} elements",
    )


NAMED_MATROIDS: Dict[str, MatroidDefinition] = {
    "F_7": MatroidDefinition(
        name="F_7", rank=3, elements=tuple(range(1, 8)), description="Fano plane"
    ),
    "M(K_4)": MatroidDefinition(
        name="M(K_4)",
        rank=3,
        elements=(1, 2, 3, 4, 5, 6),
        description="cycle matroid of K_4",
    ),
    "M(K_4\\e)": MatroidDefinition(
        name="M(K_4\\e)",
        rank=3,
        elements=(1, 2, 3, 4, 5),
        description="cycle matroid of K_4 minus an edge",
    ),
    "F_7^*": MatroidDefinition(
        name="F_7^*",
        rank=4,
        elements=(1, 2, 4, 7, 11, 13, 14),
        description="dual Fano matroid",
    ),
    "F_7+U_{1,1}": MatroidDefinition(
        name="F_7+U_{1,1}",
        rank=4,
        elements=(3, 5, 6, 8, 9, 10, 12, 15),
        description="Fano plane plus a coloop",
    ),
    "U_{0,0}": MatroidDefinition(
        name="U_{0,0}", rank=0, elements=(), description="empty matroid"
    ),
}

# Aliases accepted by lookup_definition (normalized form -> catalogue key)
_ALIASES = {
    "F7": "F_7",
    "F_7*": "F_7^*",
    "F7*": "F_7^*",
    "F_7+U_1,1": "F_7+U_{1,1}",
    "F_7(+)U_1,1": "F_7+U_{1,1}",
    "M(K4)": "M(K_4)",
    "M(K_4\\e)": "M(K_4\\e)",
    "M(K4\\e)": "M(K_4\\e)",
    "M(K_4-e)": "M(K_4\\e)",
}

_PROJECTIVE = re.compile(r"^P_(\d+)$")
_AFFINE = re.compile(r"^A_(\d+)$")
_UNIFORM = re.compile(r"^U_(\d+),(\d+)$")


def _normalize(name: str) -> str:
    return name.replace("{", "").replace("}", "").replace(" ", "")


def lookup_definition(name: str) -> Optional[MatroidDefinition]:
    """Resolve a catalogue name to its definition, or None if unknown.

    Examples:
        >>> lookup_definition("U_{3,4}").elements
        (1, 2, 4, 7)
        >>> lookup_definition("P_2").elements
        (1, 2, 3)
    """
    key = _normalize(name)
    for entry in NAMED_MATROIDS:
        if _normalize(entry) == key:
            return NAMED_MATROIDS[entry]
    if key in _ALIASES:
        return NAMED_MATROIDS[_ALIASES[key]]

    match = _PROJECTIVE.match(key)
    if match:
        k = int(match.group(1))
        return _projective(k) if k >= 1 else None
    match = _AFFINE.match(key)
    if match:
        k = int(match.group(1))
        return _affine(k) if k >= 1 else None
    match = _UNIFORM.match(key)
    if match:
        k, m = int(match.group(1)), int(match.group(2))
        if m == k:
            return _free(k)
        if m == k + 1 and k >= 2:
            return _circuit(k)
    return None


def catalogue_names() -> Tuple[str, ...]:
    """Names listed in the documentation, fixed entries first."""
    return tuple(NAMED_MATROIDS) + (
        "P_k",
        "A_k",
        "U_{k,k}",
        "U_{k,k+1}",
    )
