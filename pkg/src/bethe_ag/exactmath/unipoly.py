"""Dense univariate polynomials and canonical rational functions over Q(i)."""

from __future__ import annotations

from typing import Iterable, Sequence

import mpmath

from ..errors import PoleProximity
from .gaussian import GaussianRational, ONE, ZERO, gr


class UniPoly:
    """Coefficients stored lowest degree first; trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [c if isinstance(c, GaussianRational) else gr(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def const(c) -> "UniPoly":
        return UniPoly([c])

    @staticmethod
    def x() -> "UniPoly":
        return UniPoly([0, 1])

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> GaussianRational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def leading(self) -> GaussianRational:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[k] + other[k] for k in range(n)])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[k] - other[k] for k in range(n)])

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, GaussianRational)):
            return self.scale(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def scale(self, c) -> "UniPoly":
        c = c if isinstance(c, GaussianRational) else gr(c)
        return UniPoly([a * c for a in self.coeffs])

    def __pow__(self, k: int) -> "UniPoly":
        out, base = UniPoly([1]), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "UniPoly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return UniPoly([ZERO] * k + list(self.coeffs))

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        q = [ZERO] * max(len(rem) - len(other.coeffs) + 1, 0)
        dlc = other.leading().inv()
        dd = other.degree()
        while len(rem) - 1 >= dd and rem:
            k = len(rem) - 1 - dd
            f = rem[-1] * dlc
            q[k] = f
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - f * b
            while rem and not rem[-1]:
                rem.pop()
        return UniPoly(q), UniPoly(rem)

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, other
        while b:
            a, b = b, a.divmod(b)[1]
        if a and a.leading() != ONE:
            a = a.scale(a.leading().inv())
        return a

    def derivative(self) -> "UniPoly":
        return UniPoly([c * k for k, c in enumerate(self.coeffs)][1:])

    def eval(self, z: GaussianRational) -> GaussianRational:
        out = ZERO
        for c in reversed(self.coeffs):
            out = out * z + c
        return out

    def eval_mpc(self, z) -> mpmath.mpc:
        """Evaluate at an mpmath complex under the caller's precision."""
        out = mpmath.mpc(0)
        for c in reversed(self.coeffs):
            out = out * z + mpmath.mpc(
                mpmath.mpf(int(c.re.numerator)) / mpmath.mpf(int(c.re.denominator)),
                mpmath.mpf(int(c.im.numerator)) / mpmath.mpf(int(c.im.denominator)),
            )
        return out

    def monic(self) -> "UniPoly":
        if not self.coeffs or self.leading() == ONE:
            return self
        return self.scale(self.leading().inv())

    def squarefree_part(self) -> "UniPoly":
        if self.degree() < 1:
            return self.monic()
        g = self.gcd(self.derivative())
        return self.divmod(g)[0].monic()

    def integerized(self) -> tuple["UniPoly", GaussianRational]:
        """(scaled poly with Gaussian-integer coefficients, scale factor)."""
        from gmpy2 import lcm, mpq, mpz

        den = mpz(1)
        for c in self.coeffs:
            den = lcm(den, lcm(c.re.denominator, c.im.denominator))
        scale = gr(mpq(den))
        return self.scale(scale), scale

    def __repr__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for k in range(self.degree(), -1, -1):
            c = self[k]
            if not c:
                continue
            cs = str(c)
            if ("+" in cs[1:]) or ("-" in cs[1:]):
                cs = f"({cs})"
            bits.append(f"{cs}*x^{k}" if k else cs)
        return " + ".join(bits)


class RatFun:
    """num/den in canonical form: gcd(num, den) = 1 and den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        g = num.gcd(den)
        if g.degree() > 0:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
        lc = den.leading().inv()
        object.__setattr__(self, "num", num.scale(lc))
        object.__setattr__(self, "den", den.scale(lc))

    def __setattr__(self, *a):
        raise AttributeError("RatFun is immutable")

    def __eq__(self, other):
        return isinstance(other, RatFun) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def eval(self, z: GaussianRational) -> GaussianRational:
        d = self.den.eval(z)
        if not d:
            raise ZeroDivisionError("evaluation at a pole")
        return self.num.eval(z) / d

    def __repr__(self):
        return f"({self.num!r}) / ({self.den!r})"


def ratfun_eval_complex(r: RatFun, z: complex, precision: int = 53):
    """Multiprecision evaluation num(z)/den(z) at ``precision`` bits.

    Raises PoleProximity when |den(z)| underflows at that precision.
    """
    with mpmath.workprec(precision):
        zz = mpmath.mpc(z)
        den = r.den.eval_mpc(zz)
        scale = max(
            (abs(mpmath.mpc(float(c.re), float(c.im))) for c in r.den.coeffs),
            default=mpmath.mpf(0),
        )
        zmag = max(abs(zz), mpmath.mpf(1))
        if abs(den) <= scale * zmag ** r.den.degree() * mpmath.mpf(2) ** (-precision // 2):
            raise PoleProximity(f"denominator underflow near z={z}")
        return r.num.eval_mpc(zz) / den


def cross_equal(a: RatFun, b: RatFun) -> bool:
    """a == b as rational functions (cross-multiplied, scale-insensitive)."""
    return a.num * b.den == b.num * a.den
