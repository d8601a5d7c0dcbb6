"""Smith normal form over arbitrary-precision integers."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Optional, Sequence

from .matrix import ExactMatrix, determinant
from .partitions import factorize


@dataclass(frozen=True)
class SnfResult:
    """Invariant factors d_1 | d_2 | ... and, optionally, U, V with U A V = diag."""

    invariant_factors: tuple[int, ...]
    U: Optional[ExactMatrix] = None
    V: Optional[ExactMatrix] = None

    def __len__(self):
        return len(self.invariant_factors)

    def __iter__(self):
        return iter(self.invariant_factors)

    @property
    def determinant(self) -> int:
        out = 1
        for x in self.invariant_factors:
            out *= x
        return out


def _as_rows(A) -> list[list[int]]:
    rows = A.entries if isinstance(A, ExactMatrix) else A
    out = []
    for row in rows:
        new = []
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool):
                if hasattr(x, "denominator") and x.denominator == 1:
                    x = int(x)
                else:
                    raise ValueError(f"Smith normal form needs integer entries, got {x!r}")
            new.append(x)
        out.append(new)
    return out


def smith_normal_form(A, want_transforms: bool = False) -> SnfResult:
    """Smith normal form of an integer matrix.

    Pivots on a nonzero entry of least absolute value, clears its row and
    column with Euclidean steps, and folds in any row whose entries the pivot
    does not divide.  Deterministic for a given input.  The factors are
    non-negative; zeros (rank deficiency) come last.
    """
    a = _as_rows(A)
    n = len(a)
    m = len(a[0]) if n else 0
    U = [[int(i == j) for j in range(n)] for i in range(n)] if want_transforms else None
    V = [[int(i == j) for j in range(m)] for i in range(m)] if want_transforms else None

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        if V is not None:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row dst -= q * row src
        ra, rs = a[dst], a[src]
        for k in range(m):
            if rs[k]:
                ra[k] -= q * rs[k]
        if U is not None:
            ua, us = U[dst], U[src]
            for k in range(n):
                if us[k]:
                    ua[k] -= q * us[k]

    def add_col(dst, src, q):  # col dst -= q * col src
        for row in a:
            if row[src]:
                row[dst] -= q * row[src]
        if V is not None:
            for row in V:
                if row[src]:
                    row[dst] -= q * row[src]

    t = 0
    while t < min(n, m):
        # smallest nonzero entry in the trailing block
        best = None
        for i in range(t, n):
            for j in range(t, m):
                x = a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            pivot = a[t][t]
            changed = False
            for i in range(t + 1, n):
                if a[i][t]:
                    q = a[i][t] // pivot
                    add_row(i, t, q)
                    if a[i][t]:
                        swap_rows(t, i)
                        changed = True
                        break
            if changed:
                continue
            for j in range(t + 1, m):
                if a[t][j]:
                    q = a[t][j] // pivot
                    add_col(j, t, q)
                    if a[t][j]:
                        swap_cols(t, j)
                        changed = True
                        break
            if changed:
                continue
            # row and column cleared; pivot must divide the trailing block
            bad = next((i for i in range(t + 1, n)
                        if any(a[i][j] % pivot for j in range(t + 1, m))), None)
            if bad is None:
                break
            add_row(t, bad, -1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if U is not None:
                U[t] = [-x for x in U[t]]
        t += 1

    factors = tuple(a[i][i] for i in range(min(n, m)))
    if want_transforms:
        return SnfResult(factors, ExactMatrix(U), ExactMatrix(V))
    return SnfResult(factors)


def snf_pointwise_product(S, T, require_chain: bool = True) -> SnfResult:
    """Position-wise product of two invariant-factor lists of equal length.

    With ``require_chain`` the product must itself satisfy the divisibility
    chain, which holds when the determinants are coprime; otherwise
    ValueError is raised.
    """
    s = tuple(S.invariant_factors if isinstance(S, SnfResult) else S)
    t = tuple(T.invariant_factors if isinstance(T, SnfResult) else T)
    if len(s) != len(t):
        raise ValueError("invariant factor lists differ in length")
    out = tuple(x * y for x, y in zip(s, t))
    if require_chain and not is_divisibility_chain(out):
        raise ValueError(f"pointwise product {out} is not a divisibility chain")
    return SnfResult(out)


def is_divisibility_chain(values: Sequence[int]) -> bool:
    for x, y in zip(values, values[1:]):
        if x == 0:
            if y != 0:
                return False
        elif y % x:
            return False
    return True


def diagonal_invariant_factors(values: Sequence[int]) -> tuple[int, ...]:
    """Invariant factors of diag(values): sort each prime's exponents independently."""
    values = [abs(v) for v in values]
    zeros = sum(1 for v in values if v == 0)
    nonzero = [v for v in values if v]
    k = len(nonzero)
    out = [1] * k
    primes: dict[int, list[int]] = {}
    for idx, v in enumerate(nonzero):
        for p, e in factorize(v).items():
            primes.setdefault(p, [0] * k)[idx] = e
    for p, exps in primes.items():
        for idx, e in enumerate(sorted(exps)):
            out[idx] *= p ** e
    return tuple(out) + (0,) * zeros


def determinantal_divisors(A) -> list[int]:
    """g_k = gcd of all k x k minors, for k = 1..min(n, m).  Brute force oracle."""
    a = _as_rows(A)
    n = len(a)
    m = len(a[0]) if n else 0
    out = []
    for k in range(1, min(n, m) + 1):
        g = 0
        for rows in combinations(range(n), k):
            for cols in combinations(range(m), k):
                g = gcd(g, determinant([[a[i][j] for j in cols] for i in rows]))
                if g == 1:
                    break
            if g == 1:
                break
        out.append(g)
    return out


def invariant_factors_from_minors(A) -> tuple[int, ...]:
    """Invariant factors via determinantal divisors g_k / g_{k-1} (zeros after rank)."""
    g = determinantal_divisors(A)
    out, prev = [], 1
    for gk in g:
        if gk == 0:
            out.append(0)
        else:
            out.append(gk // prev)
            prev = gk
    return tuple(out)
