"""Closed-form invariant factors and the experimental checker for the p^r-form."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Callable, Iterable

from .forms import gram_power, gram_s_form
from .partitions import (
    Partition,
    d_p,
    enumerate_partitions,
    factorize,
    is_prime,
)
from .snf import diagonal_invariant_factors, smith_normal_form, snf_pointwise_product


class InvariantMultiset(tuple):
    """Ascending tuple of positive integers; equality is multiset equality."""

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()):
        return super().__new__(cls, sorted(int(v) for v in values))

    def as_chain(self) -> tuple[int, ...]:
        """The divisibility-chain form of diag(self), for comparison with an SNF."""
        return diagonal_invariant_factors(self)


def _check_prime(p: int):
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def D_r(lam, p: int, r: int) -> int:
    """D_r(lam) = prod over n prime to p, 0 <= i < r of p^((r-i) m + d_p(m)), m = m_{p^i n}(lam)."""
    _check_prime(p)
    if r < 1:
        raise ValueError("r must be positive")
    mult = Partition(lam).multiplicities()
    exponent = 0
    for part, m in mult.items():
        i, n = 0, part
        while n % p == 0:
            n //= p
            i += 1
        if i < r:
            exponent += (r - i) * m + d_p(m, p)
    return p ** exponent


def predicted_prime_power(p: int, r: int, d: int) -> InvariantMultiset:
    """{D_r(lam) : lam |- d}.  Proven for r <= p; conjectural beyond."""
    return InvariantMultiset(D_r(lam, p, r) for lam in enumerate_partitions(d))


def computed_invariants(s: int, d: int) -> tuple[int, ...]:
    """Invariant factors of X_s at degree d, by direct SNF."""
    return smith_normal_form(gram_s_form(s, d)).invariant_factors


def formula_applies(s: int) -> bool:
    """True when every prime power p^r exactly dividing s has r <= p."""
    return all(r <= p for p, r in factorize(s).items())


def formula_invariants(s: int, d: int) -> tuple[int, ...]:
    """Invariant factors of X_s from D_r and the coprime splitting.

    Raises ValueError if some prime power in s has exponent above its prime.
    """
    if s == 1:
        return (1,) * len(enumerate_partitions(d))
    if not formula_applies(s):
        raise ValueError(f"closed form not proven for s = {s}")
    chain = None
    for p, r in sorted(factorize(s).items()):
        part = tuple(predicted_prime_power(p, r, d))
        chain = part if chain is None else snf_pointwise_product(chain, part).invariant_factors
    return chain


def default_factor_oracle(a: int, d: int) -> tuple[int, ...]:
    """Formula where it is proven, direct SNF of X_a otherwise."""
    if a == 1 or formula_applies(a):
        return formula_invariants(a, d)
    return computed_invariants(a, d)


def snf_factor_oracle(a: int, d: int) -> tuple[int, ...]:
    if a == 1:
        return (1,) * len(enumerate_partitions(d))
    return computed_invariants(a, d)


FactorOracle = Callable[[int, int], Iterable[int]]


def predicted_shapovalov(cartan_invariants, d: int,
                         factor_oracle: FactorOracle = default_factor_oracle) -> InvariantMultiset:
    """Multiset of products prod_k f_k over compositions d_1 + ... + d_l = d.

    Each f_k runs over the invariant factors of the a_k-form at degree d_k,
    as supplied by ``factor_oracle(a_k, d_k)``.  Every tuple contributes one
    element, so the size equals the number of l-multipartitions of d.
    """
    invs = [int(a) for a in cartan_invariants]
    if any(a < 1 for a in invs):
        raise ValueError("Cartan invariant factors must be positive")
    # polynomial multiplication of multisets, one component at a time
    cache: dict[tuple[int, int], tuple[int, ...]] = {}

    def factors(a, k):
        if (a, k) not in cache:
            cache[(a, k)] = tuple(factor_oracle(a, k))
        return cache[(a, k)]

    by_degree: dict[int, list[int]] = {0: [1]}
    for a in invs:
        new: dict[int, list[int]] = {}
        for used, vals in by_degree.items():
            for k in range(d - used + 1):
                fk = factors(a, k)
                new.setdefault(used + k, []).extend(v * f for v in vals for f in fk)
        by_degree = new
    return InvariantMultiset(by_degree.get(d, []))


@dataclass(frozen=True)
class HeckeBlocks:
    l: int
    d: int
    invariants: InvariantMultiset
    provenance: str  # "formula" or "computed"

    @property
    def conjectural(self) -> bool:
        return self.provenance != "formula"


def hecke_block_invariants(l: int, d: int) -> HeckeBlocks:
    """Block invariants of the Hecke algebra at an l-th root of unity, via type A_{l-1}."""
    if l < 2:
        raise ValueError("l must be at least 2")
    invariants = [1] * (l - 2) + [l]
    if formula_applies(l):
        values = predicted_shapovalov(invariants, d, formula_invariants)
        return HeckeBlocks(l, d, values, "formula")
    values = predicted_shapovalov(invariants, d, snf_factor_oracle)
    return HeckeBlocks(l, d, values, "computed")


@dataclass
class ConjectureReport:
    p: int
    r: int
    degrees: list[dict] = field(default_factory=list)

    @property
    def proven_regime(self) -> bool:
        return self.r <= self.p

    @property
    def all_match(self) -> bool:
        return all(entry["match"] for entry in self.degrees)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "r": self.r,
            "degrees": [
                {
                    "d": e["d"],
                    "computed": [str(x) for x in e["computed"]],
                    "predicted": [str(x) for x in e["predicted"]],
                    "match": e["match"],
                }
                for e in self.degrees
            ],
        }


def check_conjecture(p: int, r: int, d_max: int) -> ConjectureReport:
    """Compare SNF(X_p^r) with {D_r(lam)} for every d <= d_max.

    Never raises on a mismatch; for r > p a mismatch is a result.
    """
    _check_prime(p)
    report = ConjectureReport(p, r)
    for d in range(d_max + 1):
        computed = smith_normal_form(gram_power(p, r, d)).invariant_factors
        predicted = predicted_prime_power(p, r, d)
        report.degrees.append({
            "d": d,
            "computed": list(computed),
            "predicted": list(predicted),
            "match": tuple(computed) == predicted.as_chain(),
        })
    return report


def determinant_exponent(d: int) -> int:
    """sum over lam |- d of l(lam)."""
    return sum(len(lam) for lam in enumerate_partitions(d))


def product_of_divisors(p: int, r: int, d: int) -> int:
    return prod(predicted_prime_power(p, r, d))
