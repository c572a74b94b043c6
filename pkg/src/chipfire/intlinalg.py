"""Exact linear algebra over the integers.

Everything in this module runs on plain Python ints, so there is no
coefficient-size limit and no floating point anywhere.  The three workhorses
are Smith normal form with unimodular witness matrices, the Bareiss
fraction-free determinant, and an exact characteristic polynomial obtained by
evaluation and interpolation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError

__all__ = [
    "IntMatrix",
    "IntPoly",
    "SnfResult",
    "smith_normal_form",
    "determinant",
    "char_poly",
    "poly_eval",
    "poly_divide_by_x",
]


def _check_int(value) -> int:
    if not isinstance(value, int):
        raise InputError(f"expected an integer entry, got {value!r}")
    return value


class IntMatrix:
    """Dense integer matrix, immutable after construction."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, entries: Iterable[int]):
        entries = tuple(_check_int(e) for e in entries)
        if rows < 0 or cols < 0:
            raise InputError("matrix dimensions must be nonnegative")
        if len(entries) != rows * cols:
            raise InputError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(
            self, "_data", tuple(entries[i * cols : (i + 1) * cols] for i in range(rows))
        )

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        rows = [list(r) for r in rows]
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        if any(len(r) != n_cols for r in rows):
            raise InputError("ragged rows")
        return cls(n_rows, n_cols, [e for r in rows for e in r])

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @property
    def entries(self) -> tuple:
        """Row-major flat tuple of entries."""
        return tuple(e for row in self._data for e in row)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def entry(self, i: int, j: int) -> int:
        return self._data[i][j]

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self._data)

    def to_rows(self) -> list:
        """Mutable list-of-lists copy of the entries."""
        return [list(row) for row in self._data]

    def __iter__(self):
        return iter(self._data)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            [self._data[i][j] for j in range(self.cols) for i in range(self.rows)],
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise InputError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        if other.rows:
            cols = list(zip(*other._data))
        else:
            cols = [()] * other.cols
        data = [
            sum(a * b for a, b in zip(row, col)) for row in self._data for col in cols
        ]
        return IntMatrix(self.rows, other.cols, data)

    def mul_vector(self, vec: Sequence[int]) -> tuple:
        if len(vec) != self.cols:
            raise InputError(f"vector length {len(vec)} != column count {self.cols}")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self._data)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._data == other._data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __repr__(self):
        return f"IntMatrix.from_rows({[list(r) for r in self._data]})"


class IntPoly:
    """Integer polynomial stored as ascending coefficients, no trailing zeros."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[int] = ()):
        coeffs = [_check_int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial reported as -1."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"IntPoly({list(self.coefficients)})"

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                x = "x" if power == 1 else f"x^{power}"
                body = x if mag == 1 else f"{mag}*{x}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f" {sign} {body}")
        return "".join(terms)


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form u @ a @ v == s with unimodular u and v.

    ``diagonal`` holds the nonnegative diagonal of ``s``; every nonzero entry
    divides the next and zeros come last.
    """

    u: IntMatrix
    s: IntMatrix
    v: IntMatrix
    diagonal: tuple


def _nearest_quotient(a: int, b: int) -> int:
    """Quotient q with |a - q*b| <= |b| / 2."""
    q, r = divmod(a, b)
    if 2 * abs(r) > abs(b):
        q += 1
    return q


def smith_normal_form(a: IntMatrix) -> SnfResult:
    """Diagonalize an integer matrix by unimodular row and column operations.

    Pivots are always chosen with minimal absolute value over the remaining
    submatrix, which keeps intermediate entries small at desk scale.  The
    returned witnesses satisfy u @ a @ v == s exactly.
    """
    m, n = a.rows, a.cols
    s = a.to_rows()
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_add(dst, src, q):
        # row dst += q * row src, mirrored into u
        s_dst, s_src = s[dst], s[src]
        for j in range(n):
            s_dst[j] += q * s_src[j]
        u_dst, u_src = u[dst], u[src]
        for j in range(m):
            u_dst[j] += q * u_src[j]

    def col_add(dst, src, q):
        # column dst += q * column src, mirrored into v
        for row in s:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    def row_swap(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def row_negate(i):
        s[i] = [-x for x in s[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    limit = min(m, n)
    while t < limit:
        # minimal-absolute-value nonzero pivot over the working submatrix
        best = None
        for i in range(t, m):
            row = s[i]
            for j in range(t, n):
                x = row[j]
                if x != 0 and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, pi, pj = best
        if pi != t:
            row_swap(t, pi)
        if pj != t:
            col_swap(t, pj)
        p = s[t][t]

        dirty = False
        for i in range(t + 1, m):
            if s[i][t] != 0:
                row_add(i, t, -_nearest_quotient(s[i][t], p))
                if s[i][t] != 0:
                    dirty = True
        for j in range(t + 1, n):
            if s[t][j] != 0:
                col_add(j, t, -_nearest_quotient(s[t][j], p))
                if s[t][j] != 0:
                    dirty = True
        if dirty:
            continue  # leftover remainders are smaller than p; rescan

        # pivot must divide the rest of the submatrix for the divisibility chain
        offender = None
        for i in range(t + 1, m):
            row = s[i]
            for j in range(t + 1, n):
                if row[j] % p != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_add(t, offender, 1)  # drags the bad entry into row t
            continue

        if p < 0:
            row_negate(t)
        t += 1

    diagonal = tuple(s[i][i] for i in range(limit))
    return SnfResult(
        u=IntMatrix.from_rows(u) if m else IntMatrix(0, 0, []),
        s=IntMatrix.from_rows(s) if m else IntMatrix(0, n, []),
        v=IntMatrix.from_rows(v) if n else IntMatrix(0, 0, []),
        diagonal=diagonal,
    )


def determinant(a: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination.

    All intermediate divisions are exact, so no rationals appear.  The empty
    0x0 matrix has determinant 1.
    """
    if not a.is_square:
        raise InputError(f"determinant needs a square matrix, got {a.rows}x{a.cols}")
    n = a.rows
    if n == 0:
        return 1
    m = a.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot_row is None:
                return 0
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i, row_k = m[i], m[k]
            head = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - head * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def char_poly(a: IntMatrix) -> IntPoly:
    """Monic characteristic polynomial det(xI - a) with integer coefficients.

    Computed by evaluating det(tI - a) at t = 0..m with Bareiss and then
    interpolating through Newton forward differences.  The difference-table
    coefficients expand the polynomial in the binomial basis, and clearing the
    m! denominator keeps everything in integers; the final division is exact
    because the target polynomial has integer coefficients.
    """
    if not a.is_square:
        raise InputError(f"char_poly needs a square matrix, got {a.rows}x{a.cols}")
    m = a.rows
    if m == 0:
        return IntPoly([1])

    values = []
    for t in range(m + 1):
        shifted = IntMatrix(
            m,
            m,
            [
                (t if i == j else 0) - a.entry(i, j)
                for i in range(m)
                for j in range(m)
            ],
        )
        values.append(determinant(shifted))

    # forward differences: diffs[k] == Delta^k f(0)
    diffs = []
    level = values
    for _ in range(m + 1):
        diffs.append(level[0])
        level = [level[i + 1] - level[i] for i in range(len(level) - 1)]

    m_fact = math.factorial(m)
    scaled = [0] * (m + 1)  # coefficients of m! * det(xI - a)
    falling = [1]  # x(x-1)...(x-k+1), ascending coefficients
    for k in range(m + 1):
        weight = diffs[k] * (m_fact // math.factorial(k))
        for i, c in enumerate(falling):
            scaled[i] += weight * c
        # falling *= (x - k)
        falling = [0] + falling
        for i in range(len(falling) - 1):
            falling[i] -= k * falling[i + 1]

    coeffs = []
    for c in scaled:
        q, r = divmod(c, m_fact)
        if r != 0:
            raise AssertionError("interpolation produced a non-integer coefficient")
        coeffs.append(q)
    return IntPoly(coeffs)


def poly_eval(p: IntPoly, x: int) -> int:
    """Evaluate at an integer point by Horner's rule."""
    _check_int(x)
    acc = 0
    for c in reversed(p.coefficients):
        acc = acc * x + c
    return acc


def poly_divide_by_x(p: IntPoly) -> IntPoly:
    """Exact quotient p / x; requires a zero constant term."""
    if p.is_zero:
        return p
    if p.coefficients[0] != 0:
        raise InputError("polynomial has a nonzero constant term, not divisible by x")
    return IntPoly(p.coefficients[1:])
