"""Partitions, multipartitions and the p-adic helpers used by the divisor formulas.

Partitions are immutable tuples of weakly decreasing positive integers.  The
canonical order on partitions of a fixed size is descending lexicographic,
so ``(d)`` comes first and ``(1^d)`` last; every matrix in the package is
indexed in this order.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Iterable, Sequence


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    >>> lam = Partition([3, 1, 1])
    >>> lam.size, lam.length, lam.multiplicity(1)
    (5, 3, 2)
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        if any(x <= 0 for x in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build a partition from parts in any order (zeros dropped)."""
        return cls(sorted((x for x in parts if x), reverse=True))

    @classmethod
    def from_multiplicities(cls, mult: dict[int, int]) -> "Partition":
        parts = []
        for part in sorted(mult, reverse=True):
            parts.extend([part] * mult[part])
        return cls(parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicity(self, i: int) -> int:
        return self.count(i)

    def multiplicities(self) -> dict[int, int]:
        """Map each distinct part to its multiplicity."""
        return dict(Counter(self))

    def scaled(self, k: int) -> "Partition":
        """The partition k*lambda, every part multiplied by k."""
        return Partition(k * x for x in self)

    def union(self, other: Sequence[int]) -> "Partition":
        return Partition.from_parts(tuple(self) + tuple(other))

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


class Multipartition(tuple):
    """An l-tuple of partitions; l is the rank."""

    __slots__ = ()

    def __new__(cls, components: Iterable[Iterable[int]]):
        comps = tuple(c if isinstance(c, Partition) else Partition(c) for c in components)
        if not comps:
            raise ValueError("a multipartition needs at least one component")
        return super().__new__(cls, comps)

    @property
    def rank(self) -> int:
        return len(self)

    @property
    def size(self) -> int:
        return sum(c.size for c in self)

    def __repr__(self) -> str:
        return "Multipartition(" + repr([list(c) for c in self]) + ")"


def _partitions_max(n: int, largest: int):
    # descending lexicographic generation
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_max(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _enumerate(d: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions_max(d, d))


def enumerate_partitions(d: int) -> list[Partition]:
    """All partitions of ``d`` in canonical (descending lexicographic) order."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    return list(_enumerate(d))


def partition_count(d: int) -> int:
    """Number of partitions of d, by Euler's pentagonal recurrence.

    Independent of :func:`enumerate_partitions`; used as its oracle.
    """
    counts = [1] + [0] * d
    for n in range(1, d + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * counts[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * counts[n - g2]
            k += 1
        counts[n] = total
    return counts[d]


def compositions(d: int, parts: int):
    """Weak compositions of d into ``parts`` non-negative integers, descending lex."""
    if parts == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in compositions(d - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _enumerate_multi(d: int, l: int) -> tuple[Multipartition, ...]:
    out = []
    for comp in compositions(d, l):
        for combo in product(*(_enumerate(k) for k in comp)):
            out.append(Multipartition(combo))
    return tuple(out)


def enumerate_multipartitions(d: int, l: int) -> list[Multipartition]:
    """All l-multipartitions of total size d.

    Ordered component-major: first by the size composition (d_1, ..., d_l)
    in descending lexicographic order, then by the canonical partition order
    of each component in turn.
    """
    if d < 0 or l < 1:
        raise ValueError("need d >= 0 and l >= 1")
    return list(_enumerate_multi(d, l))


def z_of(lam: Sequence[int]) -> int:
    """z_lambda = prod_r r^{m_r} m_r!."""
    return prod(r ** m * factorial(m) for r, m in Counter(lam).items())


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def d_p(a: int, p: int) -> int:
    """sum_{j>=1} floor(a / p^j), the p-adic valuation of a!."""
    _require_prime(p)
    if a < 0:
        raise ValueError("a must be non-negative")
    total, q = 0, p
    while q <= a:
        total += a // q
        q *= p
    return total


def p_adic_digits(m: int, p: int) -> list[int]:
    """Base-p digits of m, least significant first; [] for m = 0."""
    _require_prime(p)
    if m < 0:
        raise ValueError("m must be non-negative")
    digits = []
    while m:
        m, a = divmod(m, p)
        digits.append(a)
    return digits


def p_valuation(n: int, p: int) -> int:
    """Exponent of p in n (n != 0)."""
    if n == 0:
        raise ValueError("valuation of zero is undefined")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of a positive integer by trial division."""
    if n < 1:
        raise ValueError("n must be positive")
    out: dict[int, int] = {}
    q = 2
    while q * q <= n:
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
        q += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def sigma_of(mp: Sequence[Sequence[int]]) -> Partition:
    """Associated partition: multiplicities of all components added."""
    return Partition.from_parts(x for comp in mp for x in comp)
