"""Dense exact matrices over Q(i).

Determinants use fraction-free (Bareiss) elimination after clearing row
denominators, which keeps intermediate entries to Gaussian integers of
bounded size.  Inverses run the same forward elimination on an augmented
system followed by exact back-substitution.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from gmpy2 import lcm, mpq, mpz

from ..errors import SingularMatrix
from .gaussian import GaussianRational, ONE, ZERO, gr


class ExactMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[GaussianRational]]):
        self.entries = [list(row) for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(r) != self.cols for r in self.entries):
            raise ValueError("ragged matrix")

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        return ExactMatrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(r: int, c: int) -> "ExactMatrix":
        return ExactMatrix([[ZERO] * c for _ in range(r)])

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and all(
                self.entries[i][j] == other.entries[i][j]
                for i in range(self.rows)
                for j in range(self.cols)
            )
        )

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def scale(self, c: GaussianRational) -> "ExactMatrix":
        return ExactMatrix([[a * c for a in row] for row in self.entries])

    def __mul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        bt = list(zip(*other.entries))
        out = []
        for row in self.entries:
            orow = []
            for col in bt:
                s = ZERO
                for a, b in zip(row, col):
                    if a and b:
                        s = s + a * b
                orow.append(s)
            out.append(orow)
        return ExactMatrix(out)

    def pow(self, k: int) -> "ExactMatrix":
        if self.rows != self.cols:
            raise ValueError("matrix power needs a square matrix")
        if k < 0:
            return mat_inverse(self).pow(-k)
        out = ExactMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def trace(self) -> GaussianRational:
        return sum((self.entries[i][i] for i in range(self.rows)), ZERO)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(list(zip(*self.entries)))

    def to_complex(self) -> list[list[complex]]:
        return [[a.to_complex() for a in row] for row in self.entries]

    def __repr__(self):
        return "ExactMatrix([\n" + "\n".join(
            "  [" + ", ".join(str(a) for a in row) + "]," for row in self.entries
        ) + "\n])"


def _row_cleared(m: ExactMatrix) -> tuple[list[list[GaussianRational]], GaussianRational]:
    """Scale each row to Gaussian-integer entries; return (rows, det scale)."""
    out = []
    scale = ONE
    for row in m.entries:
        den = mpz(1)
        for a in row:
            den = lcm(den, lcm(a.re.denominator, a.im.denominator))
        f = gr(mpq(den))
        scale = scale * f
        out.append([a * f for a in row])
    return out, scale


def mat_det(m: ExactMatrix) -> GaussianRational:
    """Exact determinant via fraction-free Bareiss elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return ONE
    a, scale = _row_cleared(m)
    sign = ONE
    prev = ONE
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pk = a[k][k]
        inv_prev = prev.inv()
        for i in range(k + 1, n):
            aik = a[i][k]
            ri, rk = a[i], a[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pk - aik * rk[j]) * inv_prev
            ri[k] = ZERO
        prev = pk
    return sign * a[n - 1][n - 1] / scale


def mat_inverse(m: ExactMatrix) -> ExactMatrix:
    """Exact inverse; raises SingularMatrix when det = 0."""
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    aug = []
    for i in range(n):
        den = mpz(1)
        for a in m.entries[i]:
            den = lcm(den, lcm(a.re.denominator, a.im.denominator))
        f = gr(mpq(den))
        # Scaling the whole augmented row leaves the solution of A X = I alone.
        aug.append([a * f for a in m.entries[i]] + [f if i == j else ZERO for j in range(n)])
    prev = ONE
    for k in range(n - 1):
        if not aug[k][k]:
            for i in range(k + 1, n):
                if aug[i][k]:
                    aug[k], aug[i] = aug[i], aug[k]
                    break
            else:
                raise SingularMatrix("zero pivot column during elimination")
        pk = aug[k][k]
        inv_prev = prev.inv()
        for i in range(k + 1, n):
            aik = aug[i][k]
            ri, rk = aug[i], aug[k]
            for j in range(k + 1, 2 * n):
                ri[j] = (ri[j] * pk - aik * rk[j]) * inv_prev
            ri[k] = ZERO
        prev = pk
    if not aug[n - 1][n - 1]:
        raise SingularMatrix("determinant is zero")
    # Back-substitution on the upper-triangular Bareiss output.
    inv_rows = [[ZERO] * n for _ in range(n)]
    for col in range(n):
        x = [ZERO] * n
        for i in range(n - 1, -1, -1):
            s = aug[i][n + col]
            for j in range(i + 1, n):
                s = s - aug[i][j] * x[j]
            x[i] = s / aug[i][i]
        for i in range(n):
            inv_rows[i][col] = x[i]
    return ExactMatrix(inv_rows)


def trace_product(a: ExactMatrix, b: ExactMatrix) -> GaussianRational:
    """tr(a . b) without forming the product."""
    s = ZERO
    for i in range(a.rows):
        row = a.entries[i]
        for j in range(a.cols):
            if row[j] and b.entries[j][i]:
                s = s + row[j] * b.entries[j][i]
    return s
