"""Typed trees: level counts from a matrix of child types.

If the type of a node fixes how many children of each type it has, the
per-type counts of level m form a row vector ``pi(m)`` with
``pi(m+1) = pi(m) G``. Level sizes then obey the linear recurrence given by
the characteristic polynomial of ``G``. Everything is exact integer
arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .core import GenerativeSystem, enumerate_levels
from .errors import ClassUnobserved, DimensionMismatch, NotTyped
from .labels import Label

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class TypeAssignment:
    names: tuple[str, ...]
    # 0-based index into names
    classify: Callable[[Label], int]

    @property
    def v(self) -> int:
        return len(self.names)


def _as_matrix(G) -> Matrix:
    M = tuple(tuple(int(x) for x in row) for row in G)
    if any(len(row) != len(M) for row in M):
        raise DimensionMismatch("type matrix must be square")
    return M


def derive_type_matrix(system: GenerativeSystem, assignment: TypeAssignment, depth: int) -> Matrix:
    """Read the matrix of types off the first ``depth`` levels.

    Every explored node of a type must show the same child-type counts,
    otherwise :class:`NotTyped` is raised with two disagreeing nodes.
    """
    if depth < 1:
        raise ValueError("need depth >= 1 to see any children")
    v = assignment.v
    classify = assignment.classify
    rows: list = [None] * v
    seen_at: list = [None] * v
    for level in enumerate_levels(system, depth - 1):
        for x in level:
            i = classify(x)
            counts = [0] * v
            for c in system.expand(x):
                counts[classify(c)] += 1
            counts = tuple(counts)
            if rows[i] is None:
                rows[i], seen_at[i] = counts, x
            elif rows[i] != counts:
                raise NotTyped(
                    f"{seen_at[i]} and {x} are both {assignment.names[i]} but have "
                    f"child-type counts {rows[i]} and {counts}",
                    witness=(seen_at[i], x),
                )
    for i, row in enumerate(rows):
        if row is None:
            raise ClassUnobserved(
                f"no node of type {assignment.names[i]} within depth {depth}", index=i
            )
    return tuple(rows)


def char_polynomial(G) -> list[int]:
    """Coefficients of ``det(xI - G)``, leading 1 first (Faddeev-LeVerrier)."""
    A = _as_matrix(G)
    n = len(A)
    coeffs = [1]
    M = [[0] * n for _ in range(n)]
    c = 1
    for k in range(1, n + 1):
        # M_k = A M_(k-1) + c_(n-k+1) I
        M = [
            [sum(A[i][t] * M[t][j] for t in range(n)) + (c if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
        trace = sum(sum(A[i][t] * M[t][i] for t in range(n)) for i in range(n))
        c, rem = divmod(-trace, k)
        assert rem == 0
        coeffs.append(c)
    return coeffs


def recurrence_coefficients(poly: Sequence[int]) -> tuple[int, ...]:
    """``h`` with ``t^m - h1 t^(m-1) - ... - hm`` equal to the monic ``poly``."""
    if not poly or poly[0] != 1:
        raise ValueError("polynomial must be monic")
    return tuple(-c for c in poly[1:])


def format_polynomial(poly: Sequence[int], var: str = "x") -> str:
    deg = len(poly) - 1
    parts = []
    for k, c in enumerate(poly):
        if c == 0:
            continue
        e = deg - k
        mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
        mag = abs(c)
        body = mono if (mag == 1 and mono) else f"{mag}{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) or "0"


def step_distribution(pi: Sequence[int], G) -> tuple[int, ...]:
    """Row vector times matrix: ``pi G``."""
    A = _as_matrix(G)
    if len(pi) != len(A):
        raise DimensionMismatch(f"distribution has {len(pi)} entries, matrix is {len(A)}x{len(A)}")
    return tuple(sum(pi[i] * A[i][j] for i in range(len(A))) for j in range(len(A)))


def level_counts_matrix(G, pi0: Sequence[int], depth: int) -> list[int]:
    A = _as_matrix(G)
    if len(pi0) != len(A):
        raise DimensionMismatch(f"distribution has {len(pi0)} entries, matrix is {len(A)}x{len(A)}")
    pi = tuple(pi0)
    out = [sum(pi)]
    for _ in range(depth):
        pi = step_distribution(pi, A)
        out.append(sum(pi))
    return out


def recurrence_check(seq: Sequence[int], h: Sequence[int]) -> bool:
    m = len(h)
    if len(seq) <= m:
        raise ValueError("sequence must be longer than the recurrence order")
    return all(
        seq[n] == sum(h[i] * seq[n - 1 - i] for i in range(m)) for n in range(m, len(seq))
    )


@dataclass(frozen=True)
class LinearRecurrence:
    h: tuple[int, ...]
    initial: tuple[int, ...]

    def terms(self, n: int) -> list[int]:
        out = list(self.initial[:n])
        m = len(self.h)
        while len(out) < n:
            out.append(sum(self.h[i] * out[-1 - i] for i in range(m)))
        return out


@dataclass(frozen=True)
class RationalGF:
    """``u(t) / (1 - h1 t - ... - hm t^m)``."""

    numerator: tuple[int, ...]
    h: tuple[int, ...]

    @property
    def denominator(self) -> tuple[int, ...]:
        return (1,) + tuple(-x for x in self.h)

    def __str__(self):
        return f"({_format_series_poly(self.numerator)})/({_format_series_poly(self.denominator)})"


def _format_series_poly(coeffs: Sequence[int], var: str = "t") -> str:
    parts = []
    for e, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
        mag = abs(c)
        body = mono if (mag == 1 and mono) else (f"{mag}*{mono}" if mono else str(mag))
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) or "0"


def generating_function(h: Sequence[int], initial: Sequence[int]) -> RationalGF:
    if len(h) != len(initial):
        raise DimensionMismatch("need exactly one initial term per recurrence coefficient")
    u = tuple(
        initial[i] - sum(h[j - 1] * initial[i - j] for j in range(1, i + 1))
        for i in range(len(initial))
    )
    return RationalGF(u, tuple(h))


def gf_series(gf: RationalGF, n_terms: int) -> list[int]:
    """First ``n_terms`` Taylor coefficients of the generating function."""
    out = []
    h, u = gf.h, gf.numerator
    for n in range(n_terms):
        c = u[n] if n < len(u) else 0
        c += sum(h[i - 1] * out[n - i] for i in range(1, min(n, len(h)) + 1))
        out.append(c)
    return out
