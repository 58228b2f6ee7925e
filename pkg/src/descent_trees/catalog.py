"""Registry of the built-in generative tree systems and partition rules."""

from __future__ import annotations

from dataclasses import dataclass

from . import pythagorean as pt
from . import rational as rat
from .core import GenerativeSystem, PartitionRule
from .errors import DomainError, RootHasNoParent, UnknownSystem
from .labels import Rational, Vector
from .typed import Matrix, TypeAssignment
from .universal import exponent_and_index, laws_of_growth_system, universal_system

INT_TAG = "positive-integers/n"
PARTITION_TAG = "nonincreasing-vectors/t+sum"
COMPOSITION_TAG = "positive-vectors/t+sum"


# -- binary tree on the positive integers ---------------------------------

def check_positive_int(n) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"{n!r} is not a positive integer")


def binary_descend(n: int) -> int:
    if n == 1:
        raise RootHasNoParent("1 is the root")
    return n // 2 if n % 2 == 0 else n - 1


def binary_children(n: int) -> list[int]:
    return [n + 1, 2 * n] if n % 2 == 0 else [2 * n]


def binary_system() -> GenerativeSystem:
    return GenerativeSystem(
        id="binary", root=1, weight=int, descend=binary_descend, expand=binary_children,
        domain_tag=INT_TAG, validate=check_positive_int,
        description="halve even numbers, decrement odd ones",
    )


# -- partitions and compositions as vectors --------------------------------

def vector_weight(x: Vector) -> int:
    return len(x.parts) + sum(x.parts)


def vector_descend(x: Vector) -> Vector:
    *head, last = x.parts
    if last == 1:
        if not head:
            raise RootHasNoParent("[1] is the root")
        return Vector(tuple(head))
    return Vector((*head, last - 1))


def partition_children(x: Vector) -> list[Vector]:
    parts = x.parts
    out = []
    # bumping the last part must keep the vector nonincreasing
    if len(parts) == 1 or parts[-2] >= parts[-1] + 1:
        out.append(Vector((*parts[:-1], parts[-1] + 1)))
    out.append(Vector((*parts, 1)))
    return out


def composition_children(x: Vector) -> list[Vector]:
    parts = x.parts
    return [Vector((*parts, 1)), Vector((*parts[:-1], parts[-1] + 1))]


def check_composition(x) -> None:
    if not isinstance(x, Vector) or not x.parts:
        raise DomainError(f"expected a nonempty vector, got {x!r}")
    if min(x.parts) < 1:
        raise DomainError(f"{x} has a part below 1")


def check_partition(x) -> None:
    check_composition(x)
    if any(p < q for p, q in zip(x.parts, x.parts[1:])):
        raise DomainError(f"{x} is not nonincreasing")


def partitions_system() -> GenerativeSystem:
    return GenerativeSystem(
        id="partitions", root=Vector((1,)), weight=vector_weight, descend=vector_descend,
        expand=partition_children, domain_tag=PARTITION_TAG, validate=check_partition,
        description="integer partitions; level m holds the partitions of m+1",
    )


def compositions_system() -> GenerativeSystem:
    return GenerativeSystem(
        id="compositions", root=Vector((1,)), weight=vector_weight, descend=vector_descend,
        expand=composition_children, domain_tag=COMPOSITION_TAG, validate=check_composition,
        description="integer compositions; level m holds the compositions of m+1",
    )


# -- partition rules addressable by name ------------------------------------

PARITY = PartitionRule("parity", lambda n: "A" if n % 2 == 0 else "B", INT_TAG)

RULES = {
    "denominator-parity": rat.DENOMINATOR_PARITY,
    "mod4": pt.MOD4,
    "parity": PARITY,
}


def get_rule(name: str) -> PartitionRule:
    try:
        return RULES[name]
    except KeyError:
        raise UnknownSystem(f"unknown partition rule {name!r}; known: {', '.join(RULES)}") from None


# -- type assignments --------------------------------------------------------

def _fraction_parity(r: Rational) -> int:
    # (odd, odd) -> 0, (odd, even) -> 1, (even, odd) -> 2
    if r.a % 2 == 0:
        return 2
    return 1 if r.b % 2 == 0 else 0


def _growth_class(n: int) -> int:
    return 1 if n == 1 or exponent_and_index(n)[0] == 2 else 0


INTEGER_PARITY = TypeAssignment(("odd", "even"), lambda n: 0 if n % 2 else 1)
LAST_PART = TypeAssignment(("last=1", "last>1"), lambda x: 0 if x.parts[-1] == 1 else 1)
FRACTION_PARITY = TypeAssignment(("odd/odd", "odd/even", "even/odd"), _fraction_parity)
SINGLE = TypeAssignment(("all",), lambda x: 0)
MOD4_TYPES = TypeAssignment(("A1", "A2"), lambda p: 0 if pt.mod4_class(p) == "A1" else 1)
GROWTH = TypeAssignment(("u=1", "u=2 or root"), _growth_class)


@dataclass(frozen=True)
class TypedInfo:
    assignment: TypeAssignment
    matrix: Matrix
    root_distribution: tuple[int, ...]


@dataclass(frozen=True)
class SystemEntry:
    id: str
    system: GenerativeSystem
    typed: TypedInfo | None = None


def _build():
    cw_matrix = ((0, 1, 1), (1, 1, 0), (1, 0, 1))
    entries = [
        SystemEntry("binary", binary_system(),
                    TypedInfo(INTEGER_PARITY, ((0, 1), (1, 1)), (1, 0))),
        SystemEntry("partitions", partitions_system()),
        SystemEntry("compositions", compositions_system(),
                    TypedInfo(LAST_PART, ((1, 1), (1, 1)), (1, 0))),
        SystemEntry("kepler", rat.kepler_system(),
                    TypedInfo(FRACTION_PARITY, ((0, 1, 1), (0, 1, 1), (2, 0, 0)), (1, 0, 0))),
        SystemEntry("calkin-wilf", rat.calkin_wilf_system(),
                    TypedInfo(FRACTION_PARITY, cw_matrix, (1, 0, 0))),
        SystemEntry("rational-composed", rat.composed_rational_system(),
                    TypedInfo(FRACTION_PARITY, cw_matrix, (1, 0, 0))),
        SystemEntry("stern-brocot", rat.stern_brocot_system(),
                    TypedInfo(SINGLE, ((2,),), (1,))),
        SystemEntry("pt1", pt.pt1_system(), TypedInfo(MOD4_TYPES, ((1, 2), (2, 1)), (0, 1))),
        SystemEntry("pt2", pt.pt2_system(), TypedInfo(MOD4_TYPES, ((1, 2), (1, 2)), (0, 1))),
        SystemEntry("pt3", pt.pt3_system(), TypedInfo(MOD4_TYPES, ((1, 2), (2, 2)), (0, 1))),
        SystemEntry("pt4", pt.pt4_system(), TypedInfo(MOD4_TYPES, ((1, 2), (1, 1)), (0, 1))),
        SystemEntry("laws-of-growth", laws_of_growth_system(),
                    TypedInfo(GROWTH, ((1, 1), (1, 0)), (0, 1))),
        SystemEntry("universal", universal_system()),
    ]
    return {e.id: e for e in entries}


_REGISTRY = _build()


def list_systems() -> list[str]:
    return list(_REGISTRY)


def get_system(system_id: str) -> SystemEntry:
    try:
        return _REGISTRY[system_id]
    except KeyError:
        raise UnknownSystem(
            f"unknown system {system_id!r}; known: {', '.join(_REGISTRY)}"
        ) from None


def bounded_systems() -> list[SystemEntry]:
    return [e for e in _REGISTRY.values() if e.system.bounded_degree]


def typed_systems() -> list[SystemEntry]:
    return [e for e in _REGISTRY.values() if e.typed is not None]
