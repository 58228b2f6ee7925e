"""Rooted trees generated by descent functions.

A tree is described by a root, a weight and a map sending every other node
to its parent. The package provides an enumeration engine, composition of
systems along a two-class partition, level-count analytics for typed
trees, and a catalog of rational and Pythagorean trees.
"""

from .catalog import get_rule, get_system, list_systems
from .core import (
    GenerativeSystem,
    PartitionRule,
    VerificationReport,
    compose,
    enumerate_levels,
    level_counts,
    level_of,
    path_to_root,
    verify_system,
)
from .labels import Label, Matrix2, OddPair, Rational, Vector, format_label, parse_label

__all__ = [
    "GenerativeSystem",
    "Label",
    "Matrix2",
    "OddPair",
    "PartitionRule",
    "Rational",
    "Vector",
    "VerificationReport",
    "compose",
    "enumerate_levels",
    "format_label",
    "get_rule",
    "get_system",
    "level_counts",
    "level_of",
    "list_systems",
    "parse_label",
    "path_to_root",
    "verify_system",
]
