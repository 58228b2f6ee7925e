"""The universal tree on integers whose primes form an initial segment.

``U`` holds every ``n = 2^h1 3^h2 ... p_k^hk`` with all ``h_i >= 1``. The
parent of ``n`` drops its largest prime power, so each node has infinitely
many children ``n * p_(k+1)^s``. Any finite tree embeds into it by giving
the s-th child of a level-k node the factor ``p_(k+1)^s``.
"""

from __future__ import annotations

import threading
from bisect import bisect_left

from .core import GenerativeSystem, enumerate_levels
from .errors import BrokenSystem, DomainError, RootHasNoParent, UnboundedDegree

U_TAG = "initial-prime-segment/n"


class PrimeSource:
    """Primes in increasing order, extended on demand by a segmented sieve."""

    def __init__(self):
        self._primes = [2, 3, 5, 7, 11, 13]
        self._lock = threading.Lock()

    def _extend(self):
        with self._lock:
            primes = self._primes
            lo = primes[-1] + 1
            hi = 2 * primes[-1]
            flags = bytearray([1]) * (hi - lo + 1)
            for p in primes:
                if p * p > hi:
                    break
                start = max(p * p, -(-lo // p) * p)
                flags[start - lo :: p] = bytes(len(range(start - lo, len(flags), p)))
            primes.extend(lo + i for i, f in enumerate(flags) if f)

    def prime(self, i: int) -> int:
        """The i-th prime, counting from ``prime(1) == 2``."""
        if i < 1:
            raise ValueError("primes are indexed from 1")
        while len(self._primes) < i:
            self._extend()
        return self._primes[i - 1]

    def index(self, p: int) -> int:
        while self._primes[-1] < p:
            self._extend()
        i = bisect_left(self._primes, p)
        if self._primes[i] != p:
            raise ValueError(f"{p} is not prime")
        return i + 1

    def __iter__(self):
        i = 1
        while True:
            yield self.prime(i)
            i += 1


PRIMES = PrimeSource()


def factor_u(n: int) -> list[tuple[int, int]]:
    """``[(2, h1), (3, h2), ...]`` for ``n`` in U; DomainError otherwise."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"{n!r} is not a positive integer")
    out = []
    m = n
    for p in PRIMES:
        if m == 1:
            return out
        h = 0
        while m % p == 0:
            m //= p
            h += 1
        if h == 0:
            raise DomainError(f"{n} is divisible by a prime above {p} but not by {p}")
        out.append((p, h))
    raise AssertionError("unreachable")


def is_in_U(n: int) -> bool:
    try:
        factor_u(n)
    except DomainError:
        return False
    return True


def check_u(n) -> None:
    factor_u(n)


def format_factorization(n: int) -> str:
    f = factor_u(n)
    if not f:
        return "1"
    return "·".join(f"{p}^{h}" for p, h in f)


def theta_universal(n: int) -> int:
    f = factor_u(n)
    if not f:
        raise RootHasNoParent("1 is the root")
    p, h = f[-1]
    return n // p**h


def children_universal(n: int, max_exponent: int) -> list[int]:
    if max_exponent < 1:
        raise ValueError("max_exponent must be at least 1")
    p = PRIMES.prime(len(factor_u(n)) + 1)
    return [n * p**s for s in range(1, max_exponent + 1)]


def exponent_and_index(n: int) -> tuple[int, int]:
    """Exponent of the largest prime of ``n`` and that prime's 1-based index."""
    f = factor_u(n)
    if not f:
        raise RootHasNoParent("1 has no greatest prime")
    return f[-1][1], len(f)


def embed_tree(system: GenerativeSystem, depth: int) -> dict:
    """Map every node to depth ``depth`` into U, in breadth-first order."""
    levels = enumerate_levels(system, depth)
    image = {system.root: 1}
    for k, level in enumerate(levels[:-1]):
        p = PRIMES.prime(k + 1)
        for x in level:
            jx = image[x]
            for s, child in enumerate(system.expand(x), start=1):
                if child in image:
                    raise BrokenSystem(f"{system.id}: {child} occurs twice")
                image[child] = jx * p**s
    return image


def _unbounded(n):
    raise UnboundedDegree("nodes of the universal tree have infinitely many children")


def universal_system(max_exponent: int | None = None) -> GenerativeSystem:
    """The universal tree; pass ``max_exponent`` for a bounded-degree view."""
    if max_exponent is None:
        return GenerativeSystem(
            id="universal", root=1, weight=int, descend=theta_universal,
            expand=_unbounded, domain_tag=U_TAG, validate=check_u, bounded_degree=False,
            description="universal tree (infinite degree)",
        )
    return GenerativeSystem(
        id="universal", root=1, weight=int, descend=theta_universal,
        expand=lambda n: children_universal(n, max_exponent), domain_tag=U_TAG,
        validate=check_u, description=f"universal tree, exponents up to {max_exponent}",
    )


def laws_of_growth_children(n: int) -> list[int]:
    if n == 1:
        return [2]
    u, h = exponent_and_index(n)
    p = PRIMES.prime(h + 1)
    if u == 1:
        return [n * p, n * p * p]
    if u == 2:
        return [n * p]
    return []


def check_laws_of_growth(n) -> None:
    f = factor_u(n)
    if f and f[0][1] != 1:
        raise DomainError(f"{n}: the exponent of 2 must be 1")
    prev = 1
    for p, h in f:
        if h not in (1, 2) or (h == 2 and prev == 2):
            raise DomainError(f"{n} cannot be grown from 1 by the laws of growth")
        prev = h


def laws_of_growth_system() -> GenerativeSystem:
    return GenerativeSystem(
        id="laws-of-growth", root=1, weight=int, descend=theta_universal,
        expand=laws_of_growth_children, domain_tag=U_TAG, validate=check_laws_of_growth,
        description="binary tree relabelled inside U by its laws of growth",
    )
