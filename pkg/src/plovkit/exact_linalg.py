"""Exact linear algebra over arbitrary-precision rationals and over Q[n].

Everything here is exact: entries are Python ints or fractions.Fraction,
polynomial coefficients are Fraction. No floating point is permitted on any
path that feeds an assertion elsewhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


Scalar = int | Fraction


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


# ---------------------------------------------------------------------------
# Rational matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Matrix:
    """Dense exact matrix; entries int or Fraction, stored immutably."""

    data: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self):
        if self.data:
            w = len(self.data[0])
            if any(len(row) != w for row in self.data):
                raise ValueError("ragged rows")

    @classmethod
    def from_rows(cls, rows) -> "Matrix":
        return cls(tuple(tuple(v for v in row) for row in rows))

    @classmethod
    def identity(cls, m: int) -> "Matrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(m)) for i in range(m)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(tuple((0,) * cols for _ in range(rows)))

    @property
    def rows(self) -> int:
        return len(self.data)

    @property
    def cols(self) -> int:
        return len(self.data[0]) if self.data else 0

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.data for v in row)

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.data[i][j] == self.data[j][i]
            for i in range(self.rows) for j in range(i + 1, self.cols)
        )

    def is_integral(self) -> bool:
        return all(isinstance(v, int) or v.denominator == 1 for row in self.data for v in row)

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.data))) if self.data else self

    def scale(self, c: Scalar) -> "Matrix":
        return Matrix(tuple(tuple(c * v for v in row) for row in self.data))

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in matrix addition")
        return Matrix(tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.data, other.data)
        ))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def __mul__(self, other: "Matrix") -> "Matrix":
        return matmul(self, other)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    """Exact matrix product."""
    if a.cols != b.rows:
        raise ValueError(f"dimension mismatch: {a.rows}x{a.cols} times {b.rows}x{b.cols}")
    bt = b.transpose().data
    return Matrix(tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt)
        for row in a.data
    ))


def chain_product(matrices) -> Matrix:
    """Product of a nonempty list of conformable matrices, left to right."""
    matrices = list(matrices)
    if not matrices:
        raise ValueError("empty product")
    acc = matrices[0]
    for m in matrices[1:]:
        acc = matmul(acc, m)
    return acc


def _integer_rows(m: Matrix) -> tuple[list[list[int]], list[int]]:
    """Clear denominators row by row; returns (int rows, per-row scale factors)."""
    out, scales = [], []
    for row in m.data:
        s = 1
        for v in row:
            if isinstance(v, Fraction) and v.denominator != 1:
                s = _lcm(s, v.denominator)
        out.append([int(v * s) for v in row])
        scales.append(s)
    return out, scales


def _bareiss(rows: list[list[int]]) -> tuple[int, int, int]:
    """Fraction-free elimination on integer rows (mutated in place).

    Returns (rank, sign from row swaps, last pivot). For a square full-rank
    input the last pivot is det * sign.
    """
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    sign = 1
    prev = 1
    piv = 1
    r = 0
    for c in range(nc):
        if r == nr:
            break
        # Largest-magnitude pivot in this column: keeps the exact divisions cheap.
        best, best_row = 0, -1
        for i in range(r, nr):
            v = abs(rows[i][c])
            if v > best:
                best, best_row = v, i
        if best_row < 0:
            continue
        if best_row != r:
            rows[r], rows[best_row] = rows[best_row], rows[r]
            sign = -sign
        piv = rows[r][c]
        for i in range(r + 1, nr):
            ric = rows[i][c]
            rowi = rows[i]
            rowr = rows[r]
            for j in range(c + 1, nc):
                rowi[j] = (piv * rowi[j] - ric * rowr[j]) // prev
            rowi[c] = 0
        prev = piv
        r += 1
    return r, sign, piv


def rank(m: Matrix) -> int:
    """Exact rank over Q, by fraction-free (Bareiss) elimination."""
    if m.rows == 0 or m.cols == 0:
        return 0
    rows, _ = _integer_rows(m)
    r, _, _ = _bareiss(rows)
    return r


def inverse(m: Matrix) -> Matrix:
    """Exact inverse of a nonsingular square matrix (Gauss-Jordan over Q)."""
    if not m.is_square():
        raise ValueError("inverse needs a square matrix")
    n = m.rows
    aug = [[Fraction(v) for v in row] + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(m.data)]
    for c in range(n):
        piv_row = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv_row is None:
            raise ValueError("matrix is singular")
        aug[c], aug[piv_row] = aug[piv_row], aug[c]
        piv = aug[c][c]
        aug[c] = [v / piv for v in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[c])]
    return Matrix(tuple(tuple(row[n:]) for row in aug))


def matrix_power(m: Matrix, e: int) -> Matrix:
    """m**e for integer e; negative exponents go through the exact inverse."""
    if not m.is_square():
        raise ValueError("power needs a square matrix")
    if e < 0:
        return matrix_power(inverse(m), -e)
    acc = Matrix.identity(m.rows)
    base = m
    while e:
        if e & 1:
            acc = matmul(acc, base)
        base = matmul(base, base)
        e >>= 1
    return acc


def det(m: Matrix) -> Fraction:
    """Exact determinant of a square matrix."""
    if not m.is_square():
        raise ValueError(f"determinant needs a square matrix, got {m.rows}x{m.cols}")
    if m.rows == 0:
        return Fraction(1)
    rows, scales = _integer_rows(m)
    r, sign, piv = _bareiss(rows)
    if r < m.rows:
        return Fraction(0)
    value = Fraction(sign * piv)
    for s in scales:
        value /= s
    return value


# ---------------------------------------------------------------------------
# Univariate rational polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Poly:
    """Polynomial over Q, coefficients lowest degree first, trailing zeros stripped.

    The zero polynomial has empty coefficients and degree None (the distinguished
    "minus infinity" marker; never -1).
    """

    coeffs: tuple[Fraction, ...]

    @classmethod
    def from_coeffs(cls, coeffs) -> "Poly":
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls.from_coeffs([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls.from_coeffs([0, 1])

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [Fraction(0)] * (n - len(other.coeffs))
        return Poly.from_coeffs([x + y for x, y in zip(a, b)])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + other.scale(-1)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly.from_coeffs(out)

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return Poly.zero()
        return Poly.from_coeffs([c * v for v in self.coeffs])

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*n")
            else:
                terms.append(f"{c}*n^{i}")
        return " + ".join(terms)


def binomial_poly(i: int) -> Poly:
    """C(n, i+1) as a polynomial in n: n(n-1)...(n-i) / (i+1)!."""
    if i < 0:
        raise ValueError(f"i must be nonnegative, got {i}")
    return choose_poly(i + 1)


def choose_poly(j: int) -> Poly:
    """C(n, j) as a polynomial in n, degree j, leading coefficient 1/j!."""
    if j < 0:
        raise ValueError(f"j must be nonnegative, got {j}")
    acc = Poly.constant(1)
    for t in range(j):
        acc = acc * Poly.from_coeffs([-t, 1])
        acc = acc.scale(Fraction(1, t + 1))
    return acc


# ---------------------------------------------------------------------------
# Matrices with polynomial entries
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PolyMatrix:
    """Square matrix with Poly entries."""

    data: tuple[tuple[Poly, ...], ...]

    def __post_init__(self):
        if any(len(row) != len(self.data) for row in self.data):
            raise ValueError("polynomial matrix must be square")

    @classmethod
    def from_rows(cls, rows) -> "PolyMatrix":
        return cls(tuple(tuple(p for p in row) for row in rows))

    @classmethod
    def from_scalar_matrix(cls, m: Matrix) -> "PolyMatrix":
        return cls(tuple(tuple(Poly.constant(v) for v in row) for row in m.data))

    @property
    def size(self) -> int:
        return len(self.data)

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.size != other.size:
            raise ValueError("dimension mismatch")
        return PolyMatrix(tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.data, other.data)
        ))

    def scale(self, p: Poly) -> "PolyMatrix":
        return PolyMatrix(tuple(tuple(p * v for v in row) for row in self.data))

    def evaluate(self, x) -> Matrix:
        """Substitute an exact scalar for the indeterminate."""
        return Matrix(tuple(tuple(p(x) for p in row) for row in self.data))

    def is_symmetric(self) -> bool:
        return all(
            self.data[i][j].coeffs == self.data[j][i].coeffs
            for i in range(self.size) for j in range(i + 1, self.size)
        )


def polydet(m: PolyMatrix) -> Poly:
    """Exact determinant of a polynomial matrix.

    Minor expansion memoized over column subsets; division-free, so no
    cancellation issue can corrupt the reported degree.
    """
    n = m.size
    if n == 0:
        return Poly.constant(1)
    cache: dict[int, Poly] = {}

    def minor(row: int, mask: int) -> Poly:
        # Determinant of rows[row:] restricted to the columns set in mask.
        if row == n:
            return Poly.constant(1)
        if mask in cache:
            return cache[mask]
        acc = Poly.zero()
        sign = 1
        rest = mask
        while rest:
            low = rest & -rest
            c = low.bit_length() - 1
            entry = m.data[row][c]
            if not entry.is_zero():
                term = entry * minor(row + 1, mask ^ low)
                acc = acc + (term if sign > 0 else term.scale(-1))
            sign = -sign
            rest ^= low
        cache[mask] = acc
        return acc

    return minor(0, (1 << n) - 1)


def charpoly(m: Matrix) -> Poly:
    """Characteristic polynomial det(xI - M), monic, by Faddeev-LeVerrier.

    All interior arithmetic is exact rational; for integer input the resulting
    coefficients are integers.
    """
    if not m.is_square():
        raise ValueError("characteristic polynomial needs a square matrix")
    n = m.rows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = Matrix.identity(n)
    for j in range(1, n + 1):
        mk = matmul(m, mk)
        c = -Fraction(sum(mk.data[i][i] for i in range(n)), j)
        coeffs[n - j] = c
        mk = mk + Matrix.identity(n).scale(c)
    return Poly.from_coeffs(coeffs)
