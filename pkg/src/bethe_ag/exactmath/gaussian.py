"""Exact arithmetic in Q(i), the field of Gaussian rationals.

Every coefficient in this package is a GaussianRational: a pair of
arbitrary-precision rationals (re, im) backed by gmpy2.mpq.  Values are
immutable and always canonical (mpq keeps gcd(num, den) = 1 and den > 0).
"""

from __future__ import annotations

import re as _re
from typing import Union

from gmpy2 import mpq, mpz

Scalar = Union["GaussianRational", int, mpq]

_RAT = r"\d+(?:/\d+)?"
_CPLX_RE = _re.compile(
    rf"^\s*(?P<sa>[+-]?)\s*(?:(?P<a>{_RAT})\s*(?P<ai>i?)|(?P<onlyi>i))"
    rf"\s*(?:(?P<sb>[+-])\s*(?:(?P<b>{_RAT})\s*(?P<bi>i?)|(?P<bonlyi>i))\s*)?$"
)


class GaussianRational:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", mpq(re))
        object.__setattr__(self, "im", mpq(im))

    def __setattr__(self, *a):
        raise AttributeError("GaussianRational is immutable")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def parse(text: str) -> "GaussianRational":
        """Parse 'p/q', 'p/q+r/s i', '3+2i', 'i', '-1/2i' into Q(i)."""
        m = _CPLX_RE.match(text.replace(" ", ""))
        if not m:
            raise ValueError(f"cannot parse Gaussian rational: {text!r}")
        re_part, im_part = mpq(0), mpq(0)
        sa = -1 if m.group("sa") == "-" else 1
        if m.group("onlyi"):
            im_part += sa
        elif m.group("ai"):
            im_part += sa * mpq(m.group("a"))
        else:
            re_part += sa * mpq(m.group("a"))
        if m.group("sb"):
            sb = -1 if m.group("sb") == "-" else 1
            if m.group("bonlyi"):
                im_part += sb
            elif m.group("bi"):
                im_part += sb * mpq(m.group("b"))
            else:
                re_part += sb * mpq(m.group("b"))
        return GaussianRational(re_part, im_part)

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: Scalar) -> "GaussianRational":
        other = _coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "GaussianRational":
        other = _coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: Scalar) -> "GaussianRational":
        return _coerce(other) - self

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: Scalar) -> "GaussianRational":
        other = _coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def inv(self) -> "GaussianRational":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other: Scalar) -> "GaussianRational":
        return self * _coerce(other).inv()

    def __rtruediv__(self, other: Scalar) -> "GaussianRational":
        return _coerce(other) * self.inv()

    def __pow__(self, k: int) -> "GaussianRational":
        if k < 0:
            return self.inv() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> mpq:
        """conj(z) * z, a non-negative rational."""
        return self.re * self.re + self.im * self.im

    # -- comparisons / hashing ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, mpq, mpz)):
            return self.re == other and not self.im
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    # -- conversions -------------------------------------------------------

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def json_parts(self) -> list[str]:
        """Four decimal strings: re num/den, im num/den."""
        return [
            str(int(self.re.numerator)),
            str(int(self.re.denominator)),
            str(int(self.im.numerator)),
            str(int(self.im.denominator)),
        ]

    @staticmethod
    def from_json_parts(parts) -> "GaussianRational":
        rn, rd, im, idn = (int(p) for p in parts)
        return GaussianRational(mpq(rn, rd), mpq(im, idn))

    def __repr__(self):
        return f"GR({self})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        im = f"{self.im}i" if abs(self.im) != 1 else ("i" if self.im > 0 else "-i")
        if not self.re:
            return im
        sign = "+" if self.im > 0 else ""
        return f"{self.re}{sign}{im}"


def _coerce(x: Scalar) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(x)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def gr(re=0, im=0) -> GaussianRational:
    """Shorthand constructor; accepts ints, mpq, or 'p/q' strings."""
    return GaussianRational(mpq(re), mpq(im))
