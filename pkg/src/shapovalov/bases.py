"""Auxiliary bases that triangularize the p^r-form.

Everything is stored as expansions over the plain h basis, or the m basis for
the M family.  The coefficient tower ``tower_coefficients(p, s, l)`` holds the
integers c_l^{(s)}(lam) with

    g_l^{(i,r)} = sum_{lam |- l} c_l^{(r-i)}(lam) h_lam^{(i)},

where h^{(i)} is the level-i higher homogeneous function.  One tower serves
every r: level i of the r construction reuses the level-0 coefficients of
the (r - i) construction.  The recursion for s >= 1 is

    g_n^{(0,s)}    = g_n^{(1,s)} / p                          (n prime to p)
    g_{pl}^{(0,s)} = (g_{pl}^{(1,s)} - (g_l^{(0,s)})^p) / p

and c^{(0)} is fixed by g_n^{(1,1)} = h_n^{(1)}, g_{pl}^{(1,1)} = sum c_l^{(1)}(lam) h_{p lam}^{(1)}.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .forms import gram_s_form
from .matrix import CrossCheckError, ExactMatrix, solve_left
from .partitions import Partition, enumerate_partitions, is_prime, p_adic_digits, p_valuation
from .symfunc import (
    SymPoly,
    higher_homogeneous,
    higher_homogeneous_product,
    multinomial,
)


def _check_prime(p: int):
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def _split_power(l: int, p: int) -> tuple[int, int]:
    """l = p^i * n with n prime to p; returns (i, n)."""
    i = p_valuation(l, p)
    return i, l // p ** i


# coefficients from the binomial divisibility statement


def binomial_value(lam: Partition, p: int) -> int:
    k = len(lam)
    return comb(p, k) * multinomial(k, Counter(lam).values())


def is_exceptional(lam: Partition, p: int) -> bool:
    """lam == ((n/p)^p)."""
    return len(lam) == p and len(set(lam)) == 1


def c_coefficients(n: int, p: int) -> dict[Partition, int]:
    """c_n(lam) = C(p, l) multinomial(lam) / p, with c = 0 on the shape ((n/p)^p)."""
    _check_prime(p)
    out = {}
    for lam in enumerate_partitions(n):
        if is_exceptional(lam, p):
            out[lam] = 0
            continue
        value = binomial_value(lam, p)
        if value % p:
            raise CrossCheckError(f"C(p,l)*multinomial not divisible by {p} at {lam}")
        out[lam] = value // p
    return out


@dataclass
class DivisibilityReport:
    n: int
    p: int
    witnesses: list[tuple[Partition, int, bool]]  # (lam, value, divisible by p)

    @property
    def exceptions(self) -> list[Partition]:
        return [lam for lam, _, ok in self.witnesses if not ok]

    @property
    def holds(self) -> bool:
        """Divisible everywhere except possibly at the single shape ((n/p)^p)."""
        return all(is_exceptional(lam, self.p) for lam in self.exceptions)


def binomial_divisibility_check(n: int, p: int) -> DivisibilityReport:
    _check_prime(p)
    rows = [(lam, v, v % p == 0) for lam in enumerate_partitions(n)
            for v in [binomial_value(lam, p)]]
    return DivisibilityReport(n, p, rows)


# the coefficient tower


def _divide(f: SymPoly, p: int) -> SymPoly:
    # rational division; integrality is checked by the callers that need it
    return SymPoly(f.degree, "h", {lam: Fraction(c) / p for lam, c in f.coeffs.items()})


@lru_cache(maxsize=None)
def tower_coefficients(p: int, s: int, l: int) -> dict[Partition, int | Fraction]:
    """c_l^{(s)} as a map from partitions of l to coefficients."""
    _check_prime(p)
    if s == 0:
        i, _ = _split_power(l, p)
        if i == 0:
            return {Partition((l,)): 1}
        return {lam.scaled(p): c for lam, c in tower_coefficients(p, 1, l // p).items()}
    return dict(_g_level_zero(p, s, l).coeffs)


def _combine_level(coeffs: dict, level: int, p: int, degree: int) -> SymPoly:
    total = SymPoly(degree, "h", {})
    for lam, c in coeffs.items():
        if c:
            total = total + higher_homogeneous_product(lam, level, p).scale(c)
    return total


@lru_cache(maxsize=None)
def _g_level_zero(p: int, s: int, l: int) -> SymPoly:
    upper = _combine_level(tower_coefficients(p, s - 1, l), 1, p, l)
    i, _ = _split_power(l, p)
    if i == 0:
        return _divide(upper, p)
    return _divide(upper - _g_level_zero(p, s, l // p) ** p, p)


def g_generator(p: int, r: int, i: int, l: int) -> SymPoly:
    """g_l^{(i,r)} expanded in plain h."""
    if not 0 <= i <= r:
        raise ValueError("level must satisfy 0 <= i <= r")
    return _combine_level(tower_coefficients(p, r - i, l), i, p, l)


def g_element(p: int, r: int, i: int, lam) -> SymPoly:
    out = SymPoly.one("h")
    for part in Partition(lam):
        out = out * g_generator(p, r, i, part)
    return out


def formal_transition(p: int, s: int, d: int) -> ExactMatrix:
    """Coefficients of prod_j (sum c^{(s)}_{lam_j} X_nu) over formal multiplicative X.

    With s = r - i this is M(g^{(i,r)}, h^{(i)}).
    """
    labels = enumerate_partitions(d)
    rows = []
    for lam in labels:
        f = SymPoly.one("h")
        for part in lam:
            f = f * SymPoly(part, "h", tower_coefficients(p, s, part))
        rows.append(f.vector(labels))
    return ExactMatrix(rows, labels, labels)


# BasisFamily


@dataclass
class BasisFamily:
    family: str  # "g", "G" or "M"
    p: int
    r: int
    i: int | None
    degree: int
    expansions: dict[Partition, SymPoly] = field(default_factory=dict)
    exact: bool = True  # every division by p in the construction was exact

    def matrix(self, d: int) -> ExactMatrix:
        """Rows: family members of degree d; columns: the target basis, canonical order."""
        labels = enumerate_partitions(d)
        return ExactMatrix([self.element(lam).vector(labels) for lam in labels], labels, labels)

    def element(self, lam) -> SymPoly:
        lam = Partition(lam)
        if lam in self.expansions:
            return self.expansions[lam]
        if self.family != "g":
            raise KeyError(lam)
        out = SymPoly.one("h")
        for part in lam:
            out = out * self.expansions[Partition((part,))]
        return out


def build_g_basis(p: int, r: int, d_max: int, strict: bool | None = None) -> dict[int, BasisFamily]:
    """The families g^{(i,r)}, i = 0..r, for generator indices up to d_max.

    With ``strict`` (default when r <= p) any inexact division by p raises
    CrossCheckError; otherwise it is recorded in ``BasisFamily.exact``.
    """
    _check_prime(p)
    if r < 1:
        raise ValueError("r must be positive")
    if strict is None:
        strict = r <= p
    out = {}
    for i in range(r + 1):
        fam = BasisFamily("g", p, r, i, d_max)
        for l in range(1, d_max + 1):
            g = g_generator(p, r, i, l)
            if not g.is_integral():
                if strict:
                    raise CrossCheckError(f"g_{l}^({i},{r}) is not integral for p={p}")
                fam.exact = False
            fam.expansions[Partition((l,))] = g
        out[i] = fam
    return out


# G basis for r = 1


def G_generator(p: int, k: int) -> SymPoly:
    """G_(k) for a single part k = p^i n: g_n if i = 0, else p g_{p^i n} + (g_{p^{i-1} n})^p."""
    i, n = _split_power(k, p)
    if i == 0:
        return g_generator(p, 1, 0, n)
    return g_generator(p, 1, 0, k).scale(p) + g_generator(p, 1, 0, k // p) ** p


def G_power_block(p: int, k: int, m: int) -> SymPoly:
    """G_{(k^m)}: p-adic digit product for parts prime to p, plain power otherwise."""
    i, n = _split_power(k, p)
    out = SymPoly.one("h")
    if i == 0:
        for j, a in enumerate(p_adic_digits(m, p)):
            if a:
                out = out * g_generator(p, 1, 0, p ** j * n) ** a
        return out
    return G_generator(p, k) ** m


@lru_cache(maxsize=None)
def G_element(p: int, lam) -> SymPoly:
    out = SymPoly.one("h")
    for k, m in sorted(Partition(lam).multiplicities().items(), reverse=True):
        out = out * G_power_block(p, k, m)
    return out


def build_G_basis_r1(p: int, d_max: int) -> BasisFamily:
    _check_prime(p)
    fam = BasisFamily("G", p, 1, None, d_max)
    for d in range(1, d_max + 1):
        for lam in enumerate_partitions(d):
            fam.expansions[lam] = G_element(p, lam)
    return fam


def G_matrix(p: int, d: int) -> ExactMatrix:
    """M(G, h) at degree d."""
    labels = enumerate_partitions(d)
    return ExactMatrix([G_element(p, lam).vector(labels) for lam in labels], labels, labels)


def in_G_basis(f: SymPoly, p: int) -> dict[Partition, int | Fraction]:
    """Coordinates of an h-basis element in the G basis."""
    labels = enumerate_partitions(f.degree)
    row = solve_left([f.vector(labels)], G_matrix(p, f.degree).entries)[0]
    return {lam: c for lam, c in zip(labels, row) if c}


# M basis


def _plain_matrix(rows_fn, d: int) -> ExactMatrix:
    labels = enumerate_partitions(d)
    return ExactMatrix([rows_fn(lam).vector(labels) for lam in labels], labels, labels)


def z_matrix(p: int, r: int, d: int) -> ExactMatrix:
    """Z = M(h^{(r)}, g^{(r,r)}), solved from plain-h expansions of both families."""
    H = _plain_matrix(lambda lam: higher_homogeneous_product(lam, r, p), d)
    G = _plain_matrix(lambda lam: g_element(p, r, r, lam), d)
    return H @ G.inverse()


def M_basis(p: int, r: int, d: int) -> BasisFamily:
    """M_lam = sum_mu Z[mu, lam] m_mu, i.e. M(M, m) = Z^T.

    Z is checked against the inverse of the formal c^{(0)} transition, which
    does not depend on r.
    """
    _check_prime(p)
    if r > p:
        raise ValueError("M basis is constructed for r <= p")
    Z = z_matrix(p, r, d)
    if Z != formal_transition(p, 0, d).inverse():
        raise CrossCheckError(f"Z depends on r at p={p}, r={r}, d={d}")
    Z.to_integral()
    labels = enumerate_partitions(d)
    fam = BasisFamily("M", p, r, None, d)
    for j, lam in enumerate(labels):
        fam.expansions[lam] = SymPoly(d, "m", {mu: Z.entries[k][j] for k, mu in enumerate(labels)})
    return fam


def gm_coefficient_matrix(p: int, d: int) -> ExactMatrix:
    """Coefficients of G_lam(x) M_mu(y) in Pi(x, y)^p; rows lam, columns mu.

    Obtained from X_p by the base changes M(h, G)^T on the left and
    M(m, M) on the right.
    """
    _check_prime(p)
    labels = enumerate_partitions(d)
    X = gram_s_form(p, d)
    h_to_G = G_matrix(p, d).inverse()
    MM = M_basis(p, 1, d).matrix(d)  # M(M, m)
    W = h_to_G.T @ X @ MM.inverse()
    return W.relabel(labels, labels).to_integral()


def triangular_order(W: ExactMatrix) -> list[int] | None:
    """A simultaneous row/column permutation making W upper triangular, if one exists.

    Repeatedly takes a row whose only nonzero among the remaining columns is
    on the diagonal (peeling from the bottom).  Returns None if stuck.
    """
    n = W.shape[0]
    remaining = list(range(n))
    tail = []
    while remaining:
        pick = next((i for i in reversed(remaining)
                     if all(W.entries[i][j] == 0 for j in remaining if j != i)), None)
        if pick is None:
            return None
        remaining.remove(pick)
        tail.append(pick)
    return tail[::-1]


def N_matrix(p: int, d: int) -> ExactMatrix:
    """Rows of the G/M coefficient matrix divided by their diagonal entries."""
    W = gm_coefficient_matrix(p, d)
    rows = []
    for i, row in enumerate(W.entries):
        diag = row[i]
        if any(x % diag for x in row):
            raise CrossCheckError(f"row {W.rows[i]} not divisible by its diagonal entry")
        rows.append([x // diag for x in row])
    return ExactMatrix(rows, W.rows, W.cols)


def lead_coefficient_power(p: int, n: int, i: int, j: int) -> dict[Partition, int | Fraction]:
    """G-coordinates of (G_{(n^{p^{i-j}})})^{p^j}."""
    base = G_power_block(p, n, p ** (i - j))
    return in_G_basis(base ** (p ** j), p)


def power_in_G(p: int, n: int, m: int) -> dict[Partition, int | Fraction]:
    """G-coordinates of (G_(n))^m."""
    return in_G_basis(G_generator(p, n) ** m, p)


# property reports


def check_g_basis_properties(p: int, r: int, d_max: int) -> dict[str, bool]:
    """Exact checks of the g-basis identities for generator indices up to d_max."""
    scaling = recursion = lead = pscale = True
    for l in range(1, d_max + 1):
        if l % p:
            top = g_generator(p, r, r, l)
            scaling &= all(top == g_generator(p, r, i, l).scale(p ** (r - i)) for i in range(r + 1))
        if p * l <= d_max:
            recursion &= all(
                g_generator(p, r, i, p * l)
                == g_generator(p, r, i - 1, p * l).scale(p) + g_generator(p, r, i - 1, l) ** p
                for i in range(1, r + 1))
        for s in range(r + 1):
            coeffs = tower_coefficients(p, s, l)
            lead &= coeffs.get(Partition((l,)), 0) == 1
            if s >= 1 and p * l <= d_max:
                upper = tower_coefficients(p, s - 1, p * l)
                pscale &= all(upper.get(lam.scaled(p), 0) == c for lam, c in coeffs.items())
    integral = all(g_generator(p, r, 0, l).is_integral() for l in range(1, d_max + 1))
    unitriangular = True
    for d in range(1, d_max + 1):
        for i in range(r + 1):
            F = formal_transition(p, r - i, d)
            unitriangular &= F.is_upper_triangular() and all(x == 1 for x in F.diagonal_entries())
    return {
        "scaling_prime_to_p": scaling,
        "p_recursion": recursion,
        "leading_coefficient_one": lead,
        "coefficient_p_scaling": pscale,
        "integral_level_zero": integral,
        "upper_unitriangular": unitriangular,
    }


def check_G_properties(p: int, d_max: int) -> dict[str, bool]:
    """Triangularity, diagonal, row divisibility and N-unimodularity of the G/M matrix."""
    from .divisors import D_r

    triangular = diagonal = rows = unimodular = True
    for d in range(1, d_max + 1):
        W = gm_coefficient_matrix(p, d)
        triangular &= W.is_upper_triangular()
        diagonal &= [abs(x) for x in W.diagonal_entries()] == [D_r(lam, p, 1) for lam in W.rows]
        rows &= all(x % row[i] == 0 for i, row in enumerate(W.entries) for x in row)
        if rows:
            unimodular &= abs(N_matrix(p, d).determinant()) == 1
    return {
        "upper_triangular": triangular,
        "diagonal_is_D1": diagonal,
        "row_divisibility": rows,
        "N_unimodular": unimodular and rows,
    }


__all__ = [
    "check_G_properties",
    "check_g_basis_properties",
    "BasisFamily",
    "DivisibilityReport",
    "G_element",
    "G_generator",
    "G_matrix",
    "M_basis",
    "N_matrix",
    "binomial_divisibility_check",
    "build_G_basis_r1",
    "build_g_basis",
    "c_coefficients",
    "formal_transition",
    "g_element",
    "g_generator",
    "gm_coefficient_matrix",
    "higher_homogeneous",
    "in_G_basis",
    "lead_coefficient_power",
    "power_in_G",
    "tower_coefficients",
    "triangular_order",
    "z_matrix",
]
