"""Dense exact matrices over Python ints and Fractions.

Entries are never floats.  Inversion and determinants use Bareiss-style
fraction-free elimination, so integer inputs stay integral until the single
final division by the determinant.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Any, Callable, Sequence


class CrossCheckError(RuntimeError):
    """Two independent computations disagreed, or a guaranteed property failed."""


def _normalize(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        if isinstance(x, Rational):
            return _normalize(Fraction(x))
        raise TypeError(f"non-exact matrix entry {x!r}")
    return x


class ExactMatrix:
    """A labeled dense matrix with exact entries.

    ``rows`` and ``cols`` are label sequences (partitions, multipartitions or
    plain indices).  Integers are stored as ``int``; rationals with nontrivial
    denominators as ``Fraction``.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[Any]], rows=None, cols=None):
        self.entries = [[_normalize(x) for x in row] for row in entries]
        n = len(self.entries)
        m = len(self.entries[0]) if n else (len(cols) if cols is not None else 0)
        if any(len(row) != m for row in self.entries):
            raise ValueError("ragged matrix")
        self.rows = tuple(rows) if rows is not None else tuple(range(n))
        self.cols = tuple(cols) if cols is not None else tuple(range(m))
        if len(self.rows) != n or len(self.cols) != m:
            raise ValueError("label counts do not match matrix shape")

    # construction helpers

    @classmethod
    def identity(cls, n: int, labels=None) -> "ExactMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], labels, labels)

    @classmethod
    def diagonal(cls, values: Sequence, labels=None) -> "ExactMatrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], labels, labels)

    @classmethod
    def from_function(cls, rows, cols, fn: Callable[[Any, Any], Any]) -> "ExactMatrix":
        return cls([[fn(a, b) for b in cols] for a in rows], rows, cols)

    # basic protocol

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        if isinstance(other, ExactMatrix):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash(tuple(map(tuple, self.entries)))

    def __repr__(self) -> str:
        body = "\n ".join(str([str(x) for x in row]) for row in self.entries)
        return f"ExactMatrix({self.shape[0]}x{self.shape[1]},\n {body})"

    def tolist(self) -> list[list]:
        return [list(row) for row in self.entries]

    def relabel(self, rows=None, cols=None) -> "ExactMatrix":
        return ExactMatrix(self.entries, rows if rows is not None else self.rows,
                           cols if cols is not None else self.cols)

    def is_integral(self) -> bool:
        return all(isinstance(x, int) for row in self.entries for x in row)

    def is_square(self) -> bool:
        return self.shape[0] == self.shape[1]

    def diagonal_entries(self) -> list:
        return [self.entries[i][i] for i in range(min(self.shape))]

    # arithmetic

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix([list(col) for col in zip(*self.entries)] if self.entries else [],
                           self.cols, self.rows)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.entries))
        out = [[sum(a * b for a, b in zip(row, col) if a and b) for col in cols]
               for row in self.entries]
        return ExactMatrix(out, self.rows, other.cols)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix([[a + b for a, b in zip(r1, r2)]
                            for r1, r2 in zip(self.entries, other.entries)], self.rows, self.cols)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix([[a - b for a, b in zip(r1, r2)]
                            for r1, r2 in zip(self.entries, other.entries)], self.rows, self.cols)

    def scale(self, c) -> "ExactMatrix":
        return ExactMatrix([[c * x for x in row] for row in self.entries], self.rows, self.cols)

    def __pow__(self, k: int) -> "ExactMatrix":
        if not self.is_square() or k < 0:
            raise ValueError("matrix powers need a square matrix and k >= 0")
        result = ExactMatrix.identity(self.shape[0], self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result.relabel(self.rows, self.cols)

    def is_lower_triangular(self) -> bool:
        return all(self.entries[i][j] == 0
                   for i in range(self.shape[0]) for j in range(i + 1, self.shape[1]))

    def is_upper_triangular(self) -> bool:
        return self.T.is_lower_triangular()

    def determinant(self):
        return determinant(self.entries)

    def inverse(self) -> "ExactMatrix":
        return ExactMatrix(inverse(self.entries), self.cols, self.rows)

    def to_integral(self) -> "ExactMatrix":
        """Return self, raising CrossCheckError unless every entry is an integer."""
        if not self.is_integral():
            raise CrossCheckError("matrix expected to be integral has fractional entries")
        return self


def _clear_denominators(rows: Sequence[Sequence]) -> tuple[list[list[int]], int]:
    den = 1
    for row in rows:
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
    scaled = [[int(x * den) for x in row] for row in rows]
    return scaled, den


def determinant(rows: Sequence[Sequence]):
    """Bareiss fraction-free determinant."""
    n = len(rows)
    if n == 0:
        return 1
    a, den = _clear_denominators(rows)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
        prev = pivot
    det = sign * a[n - 1][n - 1]
    return _normalize(Fraction(det, den ** n)) if den != 1 else det


def inverse(rows: Sequence[Sequence]) -> list[list]:
    """Exact inverse by fraction-free Gauss-Jordan elimination.

    The augmented integer system [A | I] is reduced with Bareiss updates; at
    the end the left block is det(A) * I and the right block is det(A) * A^-1,
    so one division per entry recovers the inverse.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("inverse needs a square matrix")
    a, den = _clear_denominators(rows)
    aug = [a[i] + [int(i == j) for j in range(n)] for i in range(n)]
    prev = 1
    for k in range(n):
        if aug[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if aug[i][k] != 0), None)
            if swap is None:
                raise ZeroDivisionError("matrix is singular")
            aug[k], aug[swap] = aug[swap], aug[k]
        pivot = aug[k][k]
        row_k = aug[k]
        for i in range(n):
            if i == k:
                continue
            row_i = aug[i]
            aik = row_i[k]
            for j in range(2 * n):
                if j != k:
                    row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    # every diagonal entry of the left block now equals det (of the scaled matrix)
    out = []
    for i in range(n):
        d = aug[i][i]
        out.append([_normalize(Fraction(aug[i][n + j] * den, d)) for j in range(n)])
    return out


def solve_left(coeffs: Sequence[Sequence], basis: Sequence[Sequence]) -> list[list]:
    """Solve X @ basis = coeffs for X (basis square and invertible).

    Gaussian elimination on the transposed system, carrying only the given
    right-hand sides; zero entries are skipped, so sparse bases stay cheap.
    """
    n = len(basis)
    k = len(coeffs)
    # augmented rows: column j of basis, then column j of coeffs
    rows = [{i: Fraction(basis[i][j]) for i in range(n) if basis[i][j]} for j in range(n)]
    rhs = [[Fraction(coeffs[t][j]) for t in range(k)] for j in range(n)]
    pivot_row = {}
    for col in range(n):
        cand = [r for r in range(n) if r not in pivot_row.values() and col in rows[r]]
        if not cand:
            raise ZeroDivisionError("matrix is singular")
        r = min(cand, key=lambda r: len(rows[r]))
        pivot_row[col] = r
        pv = rows[r][col]
        for other in range(n):
            if other != r and col in rows[other]:
                f = rows[other][col] / pv
                target = rows[other]
                for c, v in rows[r].items():
                    nv = target.get(c, 0) - f * v
                    if nv:
                        target[c] = nv
                    else:
                        target.pop(c, None)
                if f:
                    rhs[other] = [a - f * b for a, b in zip(rhs[other], rhs[r])]
    out = [[_normalize(rhs[pivot_row[col]][t] / rows[pivot_row[col]][col]) for col in range(n)]
           for t in range(k)]
    return out
