"""Gram matrices of the s-form on symmetric functions and of the Shapovalov form.

``gram_s_form(s, d)`` is the matrix (<m_lam, h_mu>_s) over partitions of d,
rows indexed by m, columns by h.  It is produced by two independent routes
that must agree:

* conjugation ``L^-1 diag(s^{l(lam)}) L`` with L = M(p, m), and
* coefficient extraction from prod_j H(y_j)^s, where the t^n coefficient of
  H(t)^s is sum_{lam |- n} C(s, l(lam)) multinomial(lam) h_lam.

The Shapovalov Gram matrix on l-fold tensor powers is assembled from
colored power sums and a per-degree permanent pairing.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .matrix import CrossCheckError, ExactMatrix
from .partitions import Multipartition, Partition, enumerate_multipartitions, enumerate_partitions
from .symfunc import (
    SymPoly,
    orbit_coefficient,
    power_series_coefficient,
    transition_matrix,
)


# univariate s-form


def _gram_by_conjugation(s: int, d: int) -> ExactMatrix:
    labels = enumerate_partitions(d)
    L = transition_matrix("p", "m", d).matrix
    B = ExactMatrix.diagonal([s ** len(lam) for lam in labels], labels)
    return (L.inverse() @ B @ L).relabel(labels, labels)


def _gram_by_series(s: int, d: int) -> ExactMatrix:
    labels = enumerate_partitions(d)
    columns = []
    for mu in labels:
        f = SymPoly.one("h")
        for part in mu:
            f = f * power_series_coefficient(part, s)
        columns.append(f.vector(labels))
    return ExactMatrix(columns, labels, labels).T


@lru_cache(maxsize=None)
def gram_s_form(s: int, d: int) -> ExactMatrix:
    """X_s at degree d, cross-checked between conjugation and series extraction.

    Raises CrossCheckError if the two routes disagree or the result is not
    integral.
    """
    if s < 1 or d < 0:
        raise ValueError("need s >= 1 and d >= 0")
    by_series = _gram_by_series(s, d)
    by_conj = _gram_by_conjugation(s, d)
    if by_series != by_conj:
        raise CrossCheckError(f"X_{s} disagrees between algorithms at degree {d}")
    return by_conj.to_integral()


def _splits(remaining: Counter, sizes: tuple[int, ...]):
    """Yield tuples of sub-multisets (as Counters) of ``remaining`` with the given sizes."""
    if not sizes:
        if not +remaining:
            yield ()
        return
    target, rest = sizes[0], sizes[1:]
    values = sorted(v for v in remaining if remaining[v])

    def choose(idx, left, chosen):
        if left == 0:
            sub = Counter({v: c for v, c in chosen.items() if c})
            for tail in _splits(remaining - sub, rest):
                yield (sub,) + tail
            return
        if idx == len(values):
            return
        v = values[idx]
        for c in range(min(remaining[v], left // v), -1, -1):
            chosen[v] = c
            yield from choose(idx + 1, left - c * v, chosen)
        chosen[v] = 0

    yield from choose(0, target, {})


def gram_entry(alpha, beta, s: int) -> int:
    """<m_alpha, h_beta>_s computed alone, by splitting alpha across the parts of beta.

    Sums, over all ways of writing alpha as a union of partitions nu_i |- beta_i,
    the products of C(s, l(nu_i)) * multinomial(nu_i).
    """
    alpha, beta = Partition(alpha), Partition(beta)
    if alpha.size != beta.size:
        raise ValueError("gram_entry needs |alpha| == |beta|")
    total = 0
    for split in _splits(Counter(alpha), tuple(beta)):
        term = 1
        for sub in split:
            term *= orbit_coefficient(s, Partition.from_multiplicities(sub))
            if not term:
                break
        total += term
    return total


def gram_power(s: int, r: int, d: int) -> ExactMatrix:
    """X_{s^r} as the r-th matrix power of X_s, checked against a direct X_{s^r}."""
    if r < 1:
        raise ValueError("r must be positive")
    labels = enumerate_partitions(d)
    power = (gram_s_form(s, d) ** r).relabel(labels, labels)
    if power != gram_s_form(s ** r, d):
        raise CrossCheckError(f"X_{s}^{r} != X_{s ** r} at degree {d}")
    return power


# Cartan data


@dataclass(frozen=True)
class CartanSpec:
    family: str
    rank: int
    matrix: ExactMatrix
    invariant_factors: tuple[int, ...]

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"


def _dynkin_edges(family: str, rank: int) -> list[tuple[int, int]]:
    if family == "A":
        return [(i, i + 1) for i in range(rank - 1)]
    if family == "D":
        return [(i, i + 1) for i in range(rank - 2)] + [(rank - 3, rank - 1)]
    if family == "E":
        # Bourbaki labels 1..n: chain 1-3-4-...-n, node 2 attached to 4
        chain = [0] + list(range(2, rank))
        return [(chain[k], chain[k + 1]) for k in range(len(chain) - 1)] + [(1, 3)]
    raise ValueError(f"unknown family {family!r}")


def cartan_matrix(family: str, rank: int) -> ExactMatrix:
    family = family.upper()
    ok = (family == "A" and rank >= 1) or (family == "D" and rank >= 4) or \
         (family == "E" and rank in (6, 7, 8))
    if not ok:
        raise ValueError(f"unsupported simply-laced type {family}{rank}")
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j in _dynkin_edges(family, rank):
        a[i][j] = a[j][i] = -1
    return ExactMatrix(a)


def cartan(family: str, rank: int) -> CartanSpec:
    """Standard simply-laced Cartan matrix of type family+rank with its invariant factors."""
    from .snf import smith_normal_form

    mat = cartan_matrix(family, rank)
    n = mat.shape[0]
    for k in range(1, n + 1):
        if ExactMatrix([row[:k] for row in mat.entries[:k]]).determinant() <= 0:
            raise CrossCheckError(f"{family}{rank} Cartan matrix is not positive definite")
    return CartanSpec(family.upper(), rank, mat, tuple(smith_normal_form(mat).invariant_factors))


# Shapovalov form via colored power sums


@lru_cache(maxsize=None)
def _block_permanent(n: int, left: tuple[int, ...], right: tuple[int, ...], a: tuple) -> int:
    total = 0
    for sigma in permutations(range(len(right))):
        term = 1
        for t, u in enumerate(sigma):
            term *= n * a[left[t] - 1][right[u] - 1]
            if not term:
                break
        total += term
    return total


def fock_pairing(left, right, A) -> int:
    """Pairing of two colored power-sum monomials.

    ``left`` and ``right`` are sequences of (degree, color) generators with
    colors numbered from 1.  The result is zero unless both sides carry the
    same multiset of degrees; otherwise it is the product over degrees n of
    the permanent of (n * a_{i,j}) over the colors carried at that degree.
    """
    if isinstance(A, CartanSpec):
        A = A.matrix
    a = tuple(tuple(row) for row in (A.entries if isinstance(A, ExactMatrix) else A))
    by_deg_left: dict[int, list[int]] = {}
    by_deg_right: dict[int, list[int]] = {}
    for n, i in left:
        by_deg_left.setdefault(n, []).append(i)
    for n, j in right:
        by_deg_right.setdefault(n, []).append(j)
    if {n: len(v) for n, v in by_deg_left.items()} != {n: len(v) for n, v in by_deg_right.items()}:
        return 0
    total = 1
    for n, cols_left in by_deg_left.items():
        total *= _block_permanent(n, tuple(sorted(cols_left)), tuple(sorted(by_deg_right[n])), a)
        if not total:
            return 0
    return total


def _colored_p_expansion(mp: Multipartition) -> dict[tuple, Fraction]:
    """h_{mp} as a combination of colored power-sum monomials (sorted (deg, color) tuples)."""
    terms: dict[tuple, Fraction] = {(): Fraction(1)}
    for color, lam in enumerate(mp, start=1):
        if not lam:
            continue
        tm = transition_matrix("h", "p", lam.size).matrix
        row = tm.entries[tm.rows.index(lam)]
        new: dict[tuple, Fraction] = {}
        for key, c in terms.items():
            for mu, coeff in zip(tm.cols, row):
                if coeff:
                    k2 = tuple(sorted(key + tuple((n, color) for n in mu)))
                    new[k2] = new.get(k2, 0) + c * coeff
        terms = new
    return terms


def shapovalov_gram(spec: CartanSpec | ExactMatrix, d: int) -> ExactMatrix:
    """Gram matrix (<h_lam, h_mu>_S) over l-multipartitions of d.

    Accepts a CartanSpec or any symmetric integer matrix (for example the
    1x1 matrix (s), which reproduces the s-form).
    """
    A = spec.matrix if isinstance(spec, CartanSpec) else spec
    l = A.shape[0]
    labels = enumerate_multipartitions(d, l)
    expansions = [_colored_p_expansion(mp) for mp in labels]
    keyed = []
    for exp in expansions:
        groups: dict[tuple, list] = {}
        for key, c in exp.items():
            groups.setdefault(tuple(sorted(n for n, _ in key)), []).append((key, c))
        keyed.append(groups)
    n = len(labels)
    entries = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            total = Fraction(0)
            for degs, left_terms in keyed[i].items():
                right_terms = keyed[j].get(degs)
                if not right_terms:
                    continue
                for lk, lc in left_terms:
                    for rk, rc in right_terms:
                        total += lc * rc * fock_pairing(lk, rk, A)
            if total.denominator != 1:
                raise CrossCheckError(f"non-integral Shapovalov entry at {labels[i]}, {labels[j]}")
            entries[i][j] = entries[j][i] = int(total)
    return ExactMatrix(entries, labels, labels)
