"""Rational trees: Kepler, Calkin-Wilf, their parity composite, and Stern-Brocot.

Fractions are weighted by ``a + b`` and rooted at 1/1. The Stern-Brocot
tree lives on determinant-one matrices with nonnegative entries; a matrix
``[[a, b], [c, d]]`` stands for the mediant ``(a + b)/(c + d)`` of its two
columns read as fractions ``a/c`` and ``b/d``.
"""

from __future__ import annotations

from math import gcd

from .core import GenerativeSystem, PartitionRule
from .errors import DomainError, InvalidMatrix, NotCoprime, RootHasNoParent
from .labels import Matrix2, Rational

ONE = Rational(1, 1)
IDENTITY = Matrix2(1, 0, 0, 1)

RATIONAL_TAG = "positive-rationals/a+b"
MATRIX_TAG = "SL2(N)/a+b+c+d"


def check_rational(r) -> None:
    if not isinstance(r, Rational):
        raise DomainError(f"expected a fraction a/b, got {r!r}")
    if r.a < 1 or r.b < 1:
        raise DomainError(f"{r} is not a positive fraction")
    if gcd(r.a, r.b) != 1:
        raise NotCoprime(f"{r} is not in lowest terms")


def check_matrix(m) -> None:
    if not isinstance(m, Matrix2):
        raise DomainError(f"expected a 2x2 matrix, got {m!r}")
    if min(m.a, m.b, m.c, m.d) < 0:
        raise InvalidMatrix(f"{m} has a negative entry")
    if m.det != 1:
        raise InvalidMatrix(f"{m} has determinant {m.det}, not 1")


def rational_weight(r: Rational) -> int:
    return r.a + r.b


def _not_root(r):
    if r == ONE:
        raise RootHasNoParent("1/1 is the root")


def theta_kepler(r: Rational) -> Rational:
    _not_root(r)
    a, b = r.a, r.b
    if a > b:
        return Rational(a - b, b)
    return Rational(b - a, a)


def children_kepler(r: Rational) -> list[Rational]:
    a, b = r.a, r.b
    return [Rational(a + b, b), Rational(b, a + b)]


def theta_calkin_wilf(r: Rational) -> Rational:
    _not_root(r)
    a, b = r.a, r.b
    if a > b:
        return Rational(a - b, b)
    return Rational(a, b - a)


def children_calkin_wilf(r: Rational) -> list[Rational]:
    a, b = r.a, r.b
    return [Rational(a, a + b), Rational(a + b, b)]


def theta_composed(r: Rational) -> Rational:
    """Kepler's step on even denominators, Calkin-Wilf's on odd ones."""
    _not_root(r)
    a, b = r.a, r.b
    if a > b:
        return Rational(a - b, b)
    if b % 2 == 0:
        return Rational(b - a, a)
    return Rational(a, b - a)


def children_composed(r: Rational) -> list[Rational]:
    a, b = r.a, r.b
    if (a + b) % 2:
        return [Rational(a, a + b), Rational(a + b, b)]
    return [Rational(a + b, b), Rational(b, a + b)]


# class A: even denominator
DENOMINATOR_PARITY = PartitionRule(
    "denominator-parity", lambda r: "A" if r.b % 2 == 0 else "B", RATIONAL_TAG
)


def sb_descend(m: Matrix2) -> Matrix2:
    """Subtract the smaller column from the dominating one."""
    if m == IDENTITY:
        raise RootHasNoParent("the identity matrix is the root")
    a, b, c, d = m.a, m.b, m.c, m.d
    if a >= b and c >= d:
        return Matrix2(a - b, b, c - d, d)
    if b >= a and d >= c:
        return Matrix2(a, b - a, c, d - c)
    raise InvalidMatrix(f"neither column of {m} dominates the other")


def sb_children(m: Matrix2) -> list[Matrix2]:
    a, b, c, d = m.a, m.b, m.c, m.d
    return [Matrix2(a + b, b, c + d, d), Matrix2(a, a + b, c, c + d)]


def matrix_weight(m: Matrix2) -> int:
    return m.a + m.b + m.c + m.d


def matrix_to_mediant(m: Matrix2) -> Rational:
    p, q = m.a + m.b, m.c + m.d
    if p < 1 or q < 1:
        raise InvalidMatrix(f"{m} has no positive mediant")
    g = gcd(p, q)
    return Rational(p // g, q // g)


def sb_locate(r: Rational) -> Matrix2:
    """The determinant-one matrix whose mediant is ``r``.

    For ``e/f`` with ``e > 1`` the left column ``a/c`` is fixed by
    ``a = f^-1 mod e`` and the rest follows from ``a + b = e``,
    ``c + d = f`` and ``ad - bc = 1``.
    """
    check_rational(r)
    e, f = r.a, r.b
    if e == 1:
        # 1/f sits at the end of the leftmost branch
        return IDENTITY if f == 1 else Matrix2(1, 0, f - 1, 1)
    a = pow(f, -1, e)
    b = e - a
    c, rem = divmod(a * f - 1, e)
    assert rem == 0
    return Matrix2(a, b, c, f - c)


def sb_path(r: Rational) -> list[Rational]:
    m = sb_locate(r)
    path = [matrix_to_mediant(m)]
    while m != IDENTITY:
        m = sb_descend(m)
        path.append(matrix_to_mediant(m))
    return path


def kepler_system() -> GenerativeSystem:
    return GenerativeSystem(
        id="kepler", root=ONE, weight=rational_weight, descend=theta_kepler,
        expand=children_kepler, domain_tag=RATIONAL_TAG, validate=check_rational,
        description="Kepler's tree of fractions",
    )


def calkin_wilf_system() -> GenerativeSystem:
    return GenerativeSystem(
        id="calkin-wilf", root=ONE, weight=rational_weight, descend=theta_calkin_wilf,
        expand=children_calkin_wilf, domain_tag=RATIONAL_TAG, validate=check_rational,
        description="Calkin-Wilf tree",
    )


def composed_rational_system() -> GenerativeSystem:
    return GenerativeSystem(
        id="rational-composed", root=ONE, weight=rational_weight, descend=theta_composed,
        expand=children_composed, domain_tag=RATIONAL_TAG, validate=check_rational,
        description="Kepler on even denominators, Calkin-Wilf on odd ones",
    )


def stern_brocot_system() -> GenerativeSystem:
    return GenerativeSystem(
        id="stern-brocot", root=IDENTITY, weight=matrix_weight, descend=sb_descend,
        expand=sb_children, domain_tag=MATRIX_TAG, validate=check_matrix,
        description="Stern-Brocot tree on SL(2,N); mediants give the fractions",
    )
