"""Homogeneous symmetric functions over exact rationals in the h, m and p bases.

The h and p bases are multiplicative, so products there are multiset unions
of indices.  Products in the m basis use the rearrangement rule for
monomial structure constants.  Conversion to m only happens when transition
matrices are assembled.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Mapping

from .matrix import CrossCheckError, ExactMatrix
from .partitions import Partition, enumerate_partitions, z_of

BASES = ("h", "m", "p")


def _clean(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


@dataclass(frozen=True)
class SymPoly:
    """A homogeneous symmetric function: coefficients keyed by partitions of ``degree``."""

    degree: int
    basis: str
    coeffs: Mapping[Partition, int | Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {}
        for lam, c in self.coeffs.items():
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            if lam.size != self.degree:
                raise ValueError(f"{lam} has size {lam.size}, expected {self.degree}")
            if c:
                clean[lam] = _clean(c)
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def basis_element(cls, basis: str, lam) -> "SymPoly":
        lam = Partition(lam)
        return cls(lam.size, basis, {lam: 1})

    @classmethod
    def one(cls, basis: str) -> "SymPoly":
        return cls(0, basis, {Partition(): 1})

    def __getitem__(self, lam):
        return self.coeffs.get(Partition(lam), 0)

    def __iter__(self):
        return iter(self.coeffs.items())

    def __len__(self):
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs.values())

    def _check(self, other: "SymPoly"):
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")

    def __add__(self, other: "SymPoly") -> "SymPoly":
        self._check(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.degree != other.degree:
            raise ValueError("cannot add elements of different degrees")
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymPoly(self.degree, self.basis, out)

    def __neg__(self) -> "SymPoly":
        return SymPoly(self.degree, self.basis, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + (-other)

    def scale(self, c) -> "SymPoly":
        return SymPoly(self.degree, self.basis, {k: c * v for k, v in self.coeffs.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        if self.basis == "m":
            return multiply(self, other)
        return _multiplicative_product(self, other)

    def __pow__(self, k: int) -> "SymPoly":
        result = SymPoly.one(self.basis)
        for _ in range(k):
            result = result * self
        return result

    def exact_div(self, q: int) -> "SymPoly":
        """Divide every coefficient by q, raising CrossCheckError unless exact."""
        out = {}
        for lam, c in self.coeffs.items():
            v = Fraction(c) / q
            if v.denominator != 1:
                raise CrossCheckError(f"coefficient {c} of h{list(lam)} not divisible by {q}")
            out[lam] = int(v)
        return SymPoly(self.degree, self.basis, out)

    def vector(self, labels) -> list:
        return [self.coeffs.get(lam, 0) for lam in labels]

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"0 [{self.basis}, deg {self.degree}]"
        terms = " + ".join(f"{c}*{self.basis}{list(lam)}" for lam, c in sorted(self.coeffs.items(), reverse=True))
        return terms


def zero(degree: int, basis: str) -> SymPoly:
    return SymPoly(degree, basis, {})


def _multiplicative_product(f: SymPoly, g: SymPoly) -> SymPoly:
    out: dict[Partition, int | Fraction] = {}
    for a, ca in f.coeffs.items():
        for b, cb in g.coeffs.items():
            key = a.union(b)
            out[key] = out.get(key, 0) + ca * cb
    return SymPoly(f.degree + g.degree, f.basis, out)


# monomial products


@lru_cache(maxsize=None)
def _distinct_arrangements(parts: tuple[int, ...], n: int) -> tuple[tuple[int, ...], ...]:
    """Distinct permutations of ``parts`` padded with zeros to length n."""
    padded = list(parts) + [0] * (n - len(parts))
    counts = Counter(padded)
    values = sorted(counts)
    out = []

    def rec(prefix):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                prefix.append(v)
                rec(prefix)
                prefix.pop()
                counts[v] += 1

    rec([])
    return tuple(out)


def _orbit_size(lam: tuple[int, ...], n: int) -> int:
    # number of distinct exponent vectors in n variables that sort to lam
    counts = Counter(lam)
    counts[0] = n - len(lam)
    return factorial(n) // prod(factorial(c) for c in counts.values())


@lru_cache(maxsize=None)
def monomial_product(alpha: Partition, beta: Partition) -> tuple[tuple[Partition, int], ...]:
    """Structure constants of m_alpha * m_beta in the m basis.

    With N = l(alpha) + l(beta) variables (enough for every monomial that can
    occur), fix one exponent vector a for m_alpha and run over the distinct
    rearrangements b of beta.  The pair count for the orbit of gamma is
    |orbit(alpha)| * #{b : sort(a + b) = gamma}, and dividing by |orbit(gamma)|
    gives the coefficient of one monomial x^gamma.
    """
    if len(alpha) < len(beta):
        alpha, beta = beta, alpha
    n = len(alpha) + len(beta)
    if n == 0:
        return ((Partition(), 1),)
    a = tuple(alpha) + (0,) * len(beta)
    hits: Counter = Counter()
    for b in _distinct_arrangements(tuple(beta), n):
        gamma = tuple(sorted((x + y for x, y in zip(a, b) if x + y), reverse=True))
        hits[gamma] += 1
    orb_alpha = _orbit_size(tuple(alpha), n)
    out = []
    for gamma, count in hits.items():
        num = orb_alpha * count
        den = _orbit_size(gamma, n)
        if num % den:
            raise CrossCheckError("non-integral monomial structure constant")
        out.append((Partition(gamma), num // den))
    out.sort(reverse=True)
    return tuple(out)


def multiply(f: SymPoly, g: SymPoly) -> SymPoly:
    """Product of two m-basis elements, expanded in the m basis."""
    if f.basis != "m" or g.basis != "m":
        raise ValueError("multiply expects m-basis operands")
    out: dict[Partition, int | Fraction] = {}
    for a, ca in f.coeffs.items():
        for b, cb in g.coeffs.items():
            for gamma, c in monomial_product(a, b):
                out[gamma] = out.get(gamma, 0) + c * ca * cb
    return SymPoly(f.degree + g.degree, "m", out)


@lru_cache(maxsize=None)
def power_sum_in_m(lam) -> SymPoly:
    """p_lambda expanded in the m basis (p_k = m_(k))."""
    lam = Partition(lam)
    if not lam:
        return SymPoly.one("m")
    head = power_sum_in_m(Partition(lam[:-1]))
    return multiply(head, SymPoly.basis_element("m", (lam[-1],)))


@lru_cache(maxsize=None)
def _h_single_in_m(k: int) -> SymPoly:
    return SymPoly(k, "m", {mu: 1 for mu in enumerate_partitions(k)})


@lru_cache(maxsize=None)
def homogeneous_in_m(lam) -> SymPoly:
    """h_lambda expanded in the m basis (h_k is the sum of all m_mu, mu of size k)."""
    lam = Partition(lam)
    if not lam:
        return SymPoly.one("m")
    head = homogeneous_in_m(Partition(lam[:-1]))
    return multiply(head, _h_single_in_m(lam[-1]))


def _expansion_matrix(expand, d: int) -> ExactMatrix:
    labels = enumerate_partitions(d)
    return ExactMatrix([expand(lam).vector(labels) for lam in labels], labels, labels)


@lru_cache(maxsize=None)
def _base_matrices(d: int) -> dict[tuple[str, str], ExactMatrix]:
    labels = enumerate_partitions(d)
    L = _expansion_matrix(power_sum_in_m, d)
    N = _expansion_matrix(homogeneous_in_m, d)
    A = N @ L.inverse()
    z_inv = ExactMatrix.diagonal([Fraction(1, z_of(lam)) for lam in labels], labels)
    if A != L.T @ z_inv:
        raise CrossCheckError(f"M(h,p) formulas disagree at degree {d}")
    return {("p", "m"): L, ("h", "m"): N, ("h", "p"): A.relabel(labels, labels)}


@dataclass(frozen=True)
class TransitionMatrix:
    source: str
    target: str
    degree: int
    matrix: ExactMatrix


@lru_cache(maxsize=None)
def transition_matrix(source: str, target: str, d: int) -> TransitionMatrix:
    """M(source, target) at degree d: u_lambda = sum_mu M[lambda, mu] v_mu.

    Any pair among h, m, p is supported; inverses and compositions are
    derived exactly from L = M(p,m), N = M(h,m) and A = M(h,p).
    """
    if source not in BASES or target not in BASES:
        raise ValueError(f"unsupported bases ({source}, {target})")
    labels = enumerate_partitions(d)
    if source == target:
        mat = ExactMatrix.identity(len(labels), labels)
    else:
        base = _base_matrices(d)
        if (source, target) in base:
            mat = base[(source, target)]
        elif (target, source) in base:
            mat = base[(target, source)].inverse()
        else:  # pragma: no cover - the three base pairs cover all orderings
            raise ValueError(f"unsupported bases ({source}, {target})")
    return TransitionMatrix(source, target, d, mat.relabel(labels, labels))


def multinomial(total: int, parts) -> int:
    """total! / prod(part!)."""
    parts = list(parts)
    if any(x < 0 for x in parts) or sum(parts) != total:
        raise ValueError(f"parts {parts} do not sum to {total}")
    return factorial(total) // prod(factorial(x) for x in parts)


def orbit_coefficient(s: int, lam: Partition) -> int:
    """C(s, l(lam)) * multinomial(l(lam); m_1(lam), m_2(lam), ...).

    This is the coefficient of h_lam in the t^|lam| term of H(t)^s.
    """
    k = len(lam)
    return comb(s, k) * multinomial(k, Counter(lam).values())


@lru_cache(maxsize=None)
def power_series_coefficient(n: int, s: int) -> SymPoly:
    """Coefficient of t^n in H(t)^s, in the h basis."""
    return SymPoly(n, "h", {lam: orbit_coefficient(s, lam) for lam in enumerate_partitions(n)})


def substitute_h(f: SymPoly, image) -> SymPoly:
    """Replace each h_k in an h-basis element by ``image(k)`` and multiply out."""
    if f.basis != "h":
        raise ValueError("substitute_h expects an h-basis element")
    total = zero(f.degree, "h")
    for lam, c in f.coeffs.items():
        term = SymPoly.one("h")
        for k in lam:
            term = term * image(k)
        total = total + term.scale(c)
    return total


@lru_cache(maxsize=None)
def higher_homogeneous(n: int, r: int, p: int) -> SymPoly:
    """h_n^{(r)}: the coefficient of t^n in H(t)^{p^r}, expanded in plain h.

    Built by applying the level recursion
    h_n^{(r)} = sum_{lam |- n} C(p, l) * multinomial * h_lam^{(r-1)}
    r times, multiplying out in the h basis at each step.
    """
    if r < 0 or n < 0:
        raise ValueError("need n >= 0 and r >= 0")
    if r == 0:
        return SymPoly.basis_element("h", (n,)) if n else SymPoly.one("h")
    step = power_series_coefficient(n, p)
    return substitute_h(step, lambda k: higher_homogeneous(k, r - 1, p))


def higher_homogeneous_product(lam, r: int, p: int) -> SymPoly:
    """h_lam^{(r)} = prod_j h_{lam_j}^{(r)} in plain h."""
    out = SymPoly.one("h")
    for k in Partition(lam):
        out = out * higher_homogeneous(k, r, p)
    return out
