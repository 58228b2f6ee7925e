"""Pythagorean trees on odd coprime pairs.

A pair ``(a, b)`` with ``a > b >= 1`` odd and coprime encodes the primitive
triple ``(ab, (a^2 - b^2)/2, (a^2 + b^2)/2)``. The root ``(3,1)`` is
(3, 4, 5). PT1 is the Barning-Hall tree, PT2 is Price's tree, and PT3/PT4
are obtained by composing the two along the mod-4 split of ``a + b``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .core import GenerativeSystem, PartitionRule, compose, path_to_root
from .errors import (
    DomainError,
    InvalidPair,
    NotPerfectSquare,
    NotPrimitive,
    NotPythagorean,
    RootHasNoParent,
)
from .labels import OddPair

ROOT = OddPair(3, 1)
PAIR_TAG = "odd-coprime-pairs/a+b"


@dataclass(frozen=True, slots=True)
class Triple:
    """Primitive triple stored odd leg first."""

    x: int
    y: int
    z: int

    def __str__(self):
        return f"{self.x},{self.y},{self.z}"


def check_pair(p) -> None:
    if not isinstance(p, OddPair):
        raise DomainError(f"expected a pair (a,b), got {p!r}")
    a, b = p.a, p.b
    if not a > b >= 1:
        raise InvalidPair(f"{p} needs a > b >= 1")
    if a % 2 == 0 or b % 2 == 0:
        raise InvalidPair(f"{p} has an even component")
    if gcd(a, b) != 1:
        raise InvalidPair(f"{p} is not coprime")


def pair_weight(p: OddPair) -> int:
    return p.a + p.b


def _not_root(p):
    if p == ROOT:
        raise RootHasNoParent("(3,1) is the root")


def theta1(p: OddPair) -> OddPair:
    _not_root(p)
    a, b = p.a, p.b
    if a > 3 * b:
        return OddPair(a - 2 * b, b)
    if 2 * b < a < 3 * b:
        return OddPair(b, a - 2 * b)
    if b < a < 2 * b:
        return OddPair(b, 2 * b - a)
    raise InvalidPair(f"{p} falls on a boundary a = 2b or a = 3b")


def theta2(p: OddPair) -> OddPair:
    _not_root(p)
    a, b = p.a, p.b
    half_sum, half_diff = (a + b) // 2, (a - b) // 2
    # a is odd, so exactly one of the two halves is odd
    if half_sum % 2:
        q = OddPair(half_sum, b)
    else:
        q = OddPair(max(half_diff, b), min(half_diff, b))
    if not q.a > q.b:
        raise InvalidPair(f"{p} descends to the degenerate pair {q}")
    return q


def children1(p: OddPair) -> list[OddPair]:
    a, b = p.a, p.b
    return [OddPair(a + 2 * b, b), OddPair(2 * a + b, a), OddPair(2 * a - b, a)]


def children2(p: OddPair) -> list[OddPair]:
    a, b = p.a, p.b
    return [OddPair(2 * a - b, b), OddPair(2 * a + b, b), OddPair(a + 2 * b, a)]


def mod4_class(p: OddPair) -> str:
    """``"A1"`` when a + b = 2 (mod 4), ``"A2"`` when a + b = 0 (mod 4)."""
    r = (p.a + p.b) % 4
    if r == 2:
        return "A1"
    if r == 0:
        return "A2"
    raise InvalidPair(f"{p} has an odd component sum")


def theta_big(p: OddPair, which: int) -> OddPair:
    """Composite descents: ``which=1`` uses theta1 on A1, ``which=2`` on A2."""
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    cls = mod4_class(p)
    use_first = (cls == "A1") == (which == 1)
    return theta1(p) if use_first else theta2(p)


def children_big1(p: OddPair) -> list[OddPair]:
    a, b = p.a, p.b
    if mod4_class(p) == "A1":
        return [OddPair(2 * a - b, a), OddPair(2 * a + b, b), OddPair(a + 2 * b, a)]
    return [OddPair(a + 2 * b, b), OddPair(2 * a + b, a), OddPair(2 * a + b, b), OddPair(a + 2 * b, a)]


def children_big2(p: OddPair) -> list[OddPair]:
    a, b = p.a, p.b
    if mod4_class(p) == "A1":
        return [OddPair(2 * a - b, b), OddPair(2 * a + b, a), OddPair(a + 2 * b, b)]
    return [OddPair(2 * a - b, a), OddPair(2 * a - b, b)]


# class A is A1; swapped() gives the (A2, A1) split
MOD4 = PartitionRule("mod4", lambda p: "A" if mod4_class(p) == "A1" else "B", PAIR_TAG)


def pair_to_triple(p: OddPair) -> Triple:
    a, b = p.a, p.b
    return Triple(a * b, (a * a - b * b) // 2, (a * a + b * b) // 2)


def normalize_triple(x: int, y: int, z: int) -> Triple:
    """Order the legs odd-first and check the triple is primitive."""
    if min(x, y, z) < 1:
        raise NotPythagorean(f"{x},{y},{z} has a nonpositive entry")
    if x * x + y * y != z * z:
        raise NotPythagorean(f"{x}^2 + {y}^2 != {z}^2")
    if gcd(x, y) != 1:
        raise NotPrimitive(f"{x},{y},{z} has common factor {gcd(x, y)}")
    if x % 2 == 0:
        x, y = y, x
    return Triple(x, y, z)


def triple_to_pair(t) -> OddPair:
    t = normalize_triple(*(t.x, t.y, t.z) if isinstance(t, Triple) else t)
    a2, b2 = t.z + t.y, t.z - t.y
    a, b = isqrt(a2), isqrt(b2)
    if a * a != a2 or b * b != b2:
        raise NotPerfectSquare(f"z + y = {a2} and z - y = {b2} are not both squares")
    p = OddPair(a, b)
    check_pair(p)
    return p


def pt1_system() -> GenerativeSystem:
    return GenerativeSystem(
        id="pt1", root=ROOT, weight=pair_weight, descend=theta1, expand=children1,
        domain_tag=PAIR_TAG, validate=check_pair, description="Barning-Hall tree",
    )


def pt2_system() -> GenerativeSystem:
    return GenerativeSystem(
        id="pt2", root=ROOT, weight=pair_weight, descend=theta2, expand=children2,
        domain_tag=PAIR_TAG, validate=check_pair, description="Price's tree",
    )


def pt3_system() -> GenerativeSystem:
    return compose(pt1_system(), pt2_system(), MOD4).with_id(
        "pt3", "pt1 on A1, pt2 on A2 (generic composition)"
    )


def pt4_system() -> GenerativeSystem:
    return compose(pt1_system(), pt2_system(), MOD4.swapped()).with_id(
        "pt4", "pt1 on A2, pt2 on A1 (generic composition)"
    )


PT_SYSTEMS = {"pt1": pt1_system, "pt2": pt2_system, "pt3": pt3_system, "pt4": pt4_system}


def triple_path(t, tree: str | GenerativeSystem) -> list[Triple]:
    """Triples on the way from ``t`` up to (3, 4, 5) in the chosen tree."""
    system = PT_SYSTEMS[tree]() if isinstance(tree, str) else tree
    return [pair_to_triple(p) for p in path_to_root(system, triple_to_pair(t))]
