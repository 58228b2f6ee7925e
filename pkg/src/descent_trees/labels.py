"""Node labels and their canonical text forms.

Five label shapes are used by the built-in systems::

    11              plain int
    11/8            Rational
    [3,2,1]         Vector
    (7,3)           OddPair
    [[7,4],[5,3]]   Matrix2

Printing never emits whitespace; parsing tolerates spaces after commas.
Domain invariants (coprimality, parity, ...) are checked by the owning
system, not here.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .errors import LabelParseError


@dataclass(frozen=True, slots=True)
class Rational:
    a: int
    b: int

    def __str__(self):
        return f"{self.a}/{self.b}"


@dataclass(frozen=True, slots=True)
class Vector:
    parts: tuple[int, ...]

    def __str__(self):
        return "[" + ",".join(map(str, self.parts)) + "]"

    def __len__(self):
        return len(self.parts)


@dataclass(frozen=True, slots=True)
class OddPair:
    a: int
    b: int

    def __str__(self):
        return f"({self.a},{self.b})"


@dataclass(frozen=True, slots=True)
class Matrix2:
    """Row-major 2x2 matrix ``[[a, b], [c, d]]``."""

    a: int
    b: int
    c: int
    d: int

    def __str__(self):
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"

    @property
    def det(self):
        return self.a * self.d - self.b * self.c


Label = Union[int, Rational, Vector, OddPair, Matrix2]

_SEP = r",\s*"
_INT_RE = re.compile(r"\d+")
_RATIONAL_RE = re.compile(r"(\d+)/(\d+)")
_VECTOR_RE = re.compile(rf"\[(\d+(?:{_SEP}\d+)*)\]")
_PAIR_RE = re.compile(rf"\((\d+){_SEP}(\d+)\)")
_MATRIX_RE = re.compile(rf"\[\[(\d+){_SEP}(\d+)\]{_SEP}\[(\d+){_SEP}(\d+)\]\]")

_PARSERS = [
    (_INT_RE, lambda m: int(m.group(0))),
    (_RATIONAL_RE, lambda m: Rational(int(m.group(1)), int(m.group(2)))),
    (_PAIR_RE, lambda m: OddPair(int(m.group(1)), int(m.group(2)))),
    (_MATRIX_RE, lambda m: Matrix2(*map(int, m.groups()))),
    (_VECTOR_RE, lambda m: Vector(tuple(int(s) for s in re.split(_SEP, m.group(1))))),
]


def format_label(x: Label) -> str:
    if isinstance(x, bool) or not isinstance(x, (int, Rational, Vector, OddPair, Matrix2)):
        raise TypeError(f"not a node label: {x!r}")
    return str(x)


def parse_label(text: str, kind: type | None = None) -> Label:
    """Parse a canonical label string.

    If ``kind`` is given the result must be of that type, otherwise
    :class:`LabelParseError` is raised.
    """
    text = text.strip()
    for regex, build in _PARSERS:
        m = regex.fullmatch(text)
        if m:
            x = build(m)
            if kind is not None and not isinstance(x, kind):
                raise LabelParseError(f"expected a {kind.__name__} label, got {text!r}")
            return x
    raise LabelParseError(f"cannot parse label {text!r}")
