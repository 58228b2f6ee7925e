"""Generative tree systems: a root, a weight, a descent map and its inverse.

A system describes a rooted tree implicitly. ``descend`` sends every
non-root node to its parent and must strictly lower the weight;
``expand`` lists the children of a node, i.e. the preimages of
``descend``, in a fixed order. Everything here is a pure function of the
labels, so systems can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, NamedTuple

from .errors import BrokenSystem, DomainError, IncompatibleSystems, UnboundedDegree
from .labels import Label


def _accept(x):
    return None


@dataclass(frozen=True)
class GenerativeSystem:
    id: str
    root: Label
    weight: Callable[[Label], int]
    descend: Callable[[Label], Label]
    expand: Callable[[Label], list]
    domain_tag: str
    # raises DomainError when a label is outside the system's node set
    validate: Callable[[Label], None] = field(default=_accept, repr=False)
    bounded_degree: bool = True
    description: str = field(default="", compare=False)

    def children(self, x: Label) -> list:
        if not self.bounded_degree:
            raise UnboundedDegree(f"system {self.id!r} has nodes of infinite degree")
        return list(self.expand(x))

    def with_id(self, new_id: str, description: str = "") -> "GenerativeSystem":
        return replace(self, id=new_id, description=description or self.description)


@dataclass(frozen=True)
class PartitionRule:
    """Splits a node set into two classes, reported as ``"A"`` or ``"B"``."""

    name: str
    classify: Callable[[Label], str]
    domain_tag: str | None = None

    def swapped(self) -> "PartitionRule":
        inner = self.classify
        return PartitionRule(
            name=f"{self.name}:BA",
            classify=lambda x: "B" if inner(x) == "A" else "A",
            domain_tag=self.domain_tag,
        )


def path_to_root(system: GenerativeSystem, x: Label) -> list:
    """Return ``[x, descend(x), descend(descend(x)), ..., root]``.

    The number of steps is capped at ``weight(x) - weight(root)``; every
    honest step lowers the weight by at least one, so running past the cap
    (or failing to lower the weight) means the system itself is broken.
    """
    system.validate(x)
    root = system.root
    w = system.weight(x)
    budget = w - system.weight(root)
    path = [x]
    while x != root:
        if len(path) > budget:
            raise BrokenSystem(
                f"{system.id}: no root reached from {path[0]} within {budget} steps"
            )
        y = system.descend(x)
        wy = system.weight(y)
        if not wy < w:
            raise BrokenSystem(f"{system.id}: weight did not decrease from {x} to {y}")
        path.append(y)
        x, w = y, wy
    return path


def level_of(system: GenerativeSystem, x: Label) -> int:
    return len(path_to_root(system, x)) - 1


def enumerate_levels(system: GenerativeSystem, depth: int, check: bool = True) -> list:
    """Breadth-first levels ``[[root], T_1, ..., T_depth]`` in expansion order."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if not system.bounded_degree:
        raise UnboundedDegree(
            f"system {system.id!r} has nodes of infinite degree; use a bounded view"
        )
    levels = [[system.root]]
    for _ in range(depth):
        nxt = []
        for x in levels[-1]:
            nxt.extend(system.expand(x))
        if check:
            for y in nxt:
                system.validate(y)
        levels.append(nxt)
    return levels


def level_counts(system: GenerativeSystem, depth: int) -> list[int]:
    return [len(level) for level in enumerate_levels(system, depth, check=False)]


def compose(first: GenerativeSystem, second: GenerativeSystem, rule: PartitionRule) -> GenerativeSystem:
    """Descend with ``first`` on class A and with ``second`` on class B.

    Children of ``x`` are the class-A children ``first`` lists, followed by
    the class-B children ``second`` lists.
    """
    if first.domain_tag != second.domain_tag:
        raise IncompatibleSystems(
            f"domain tags differ: {first.domain_tag!r} vs {second.domain_tag!r}"
        )
    if first.root != second.root:
        raise IncompatibleSystems(f"roots differ: {first.root} vs {second.root}")
    if rule.domain_tag is not None and rule.domain_tag != first.domain_tag:
        raise IncompatibleSystems(
            f"rule {rule.name!r} applies to {rule.domain_tag!r}, not {first.domain_tag!r}"
        )
    if not (first.bounded_degree and second.bounded_degree):
        raise UnboundedDegree("compose needs two bounded-degree systems")

    classify = rule.classify

    def descend(x):
        return first.descend(x) if classify(x) == "A" else second.descend(x)

    def expand(x):
        return [y for y in first.expand(x) if classify(y) == "A"] + [
            y for y in second.expand(x) if classify(y) == "B"
        ]

    return GenerativeSystem(
        id=f"compose({first.id},{second.id},{rule.name})",
        root=first.root,
        weight=first.weight,
        descend=descend,
        expand=expand,
        domain_tag=first.domain_tag,
        validate=first.validate,
        description=f"{first.id} on class A, {second.id} on class B of {rule.name}",
    )


class Violation(NamedTuple):
    node: str
    detail: str


@dataclass
class VerificationReport:
    system: str
    depth: int
    nodes: int = 0
    descent: list[Violation] = field(default_factory=list)
    consistency: list[Violation] = field(default_factory=list)
    duplicates: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.descent or self.consistency or self.duplicates)

    def lines(self) -> list[str]:
        out = [
            f"system {self.system}",
            f"depth {self.depth}",
            f"nodes {self.nodes}",
            f"descent_violations {len(self.descent)}",
            f"consistency_violations {len(self.consistency)}",
            f"duplicates {len(self.duplicates)}",
        ]
        for kind, items in (("descent", self.descent), ("consistency", self.consistency),
                            ("duplicate", self.duplicates)):
            out.extend(f"{kind} {v.node}: {v.detail}" for v in items)
        out.append("ok" if self.ok else "FAILED")
        return out


def verify_system(system: GenerativeSystem, depth: int, max_reported: int = 50) -> VerificationReport:
    """Check the descent inequality, parent/child consistency and uniqueness.

    Violations are collected, never raised. At most ``max_reported`` entries
    are kept per category.
    """
    report = VerificationReport(system.id, depth)
    root = system.root

    def note(items, node, detail):
        if len(items) < max_reported:
            items.append(Violation(str(node), detail))

    seen = {root}
    level = [root]
    report.nodes = 1
    for m in range(depth + 1):
        nxt = []
        for x in level:
            if x != root:
                try:
                    p = system.descend(x)
                    if not system.weight(p) < system.weight(x):
                        note(report.descent, x, f"weight({p}) >= weight({x})")
                except Exception as exc:  # a broken descend is itself a finding
                    note(report.descent, x, f"descend raised {type(exc).__name__}: {exc}")
            if m == depth:
                continue
            for c in system.expand(x):
                try:
                    system.validate(c)
                except DomainError as exc:
                    note(report.consistency, c, f"child of {x} outside domain: {exc}")
                try:
                    back = system.descend(c)
                except Exception as exc:
                    note(report.consistency, c, f"descend raised {type(exc).__name__}: {exc}")
                else:
                    if back != x:
                        note(report.consistency, c, f"listed as child of {x} but descends to {back}")
                if c in seen:
                    note(report.duplicates, c, f"appears again under {x}")
                else:
                    seen.add(c)
                nxt.append(c)
        report.nodes += len(nxt)
        level = nxt
    return report
