"""Sparse multivariate polynomials over Q(i) with a declared monomial order.

A polynomial is a dict mapping exponent tuples (one non-negative int per ring
variable) to GaussianRational coefficients; zero coefficients are never
stored.  The ring fixes the variable names, their number, and the monomial
order used for leading terms.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Sequence

from .gaussian import GaussianRational, ZERO, ONE, gr

Exponents = tuple  # tuple[int, ...]


class MonomialOrder:
    """Total monomial order: degrevlex (default), lex, or a block order.

    ``sort_key`` is usable with max()/sorted(): larger key = larger monomial.
    A block order compares the first ``blocks[0]`` variables (degrevlex)
    first, which makes it an elimination order for that leading block.
    """

    def __init__(self, kind: str = "degrevlex", blocks: Sequence[int] | None = None):
        if kind not in ("degrevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {kind!r}")
        if kind == "block" and not blocks:
            raise ValueError("block order needs block sizes")
        self.kind = kind
        self.blocks = tuple(blocks) if blocks else None

    def sort_key(self) -> Callable[[Exponents], tuple]:
        if self.kind == "degrevlex":
            return _degrevlex_key
        if self.kind == "lex":
            return lambda e: e
        sizes = self.blocks

        def key(e: Exponents) -> tuple:
            out, i = [], 0
            for s in sizes:
                out.append(_degrevlex_key(e[i : i + s]))
                i += s
            out.append(_degrevlex_key(e[i:]))
            return tuple(out)

        return key

    def tag(self) -> str:
        if self.kind == "block":
            return "block" + ",".join(map(str, self.blocks))
        return self.kind

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and self.kind == other.kind
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash((self.kind, self.blocks))


def _degrevlex_key(e: Exponents) -> tuple:
    return (sum(e), tuple(-x for x in reversed(e)))


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


class PolyRing:
    """Variable names plus a monomial order."""

    def __init__(self, names: Sequence[str], order: MonomialOrder = DEGREVLEX):
        self.names = tuple(names)
        self.n = len(self.names)
        self.order = order
        self.key = order.sort_key()
        self._zero_exp = (0,) * self.n

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def const(self, c) -> "MultiPoly":
        c = c if isinstance(c, GaussianRational) else gr(c)
        return MultiPoly(self, {self._zero_exp: c} if c else {})

    def var(self, i: int) -> "MultiPoly":
        e = [0] * self.n
        e[i] = 1
        return MultiPoly(self, {tuple(e): ONE})

    def monomial(self, exps: Sequence[int], coeff=ONE) -> "MultiPoly":
        coeff = coeff if isinstance(coeff, GaussianRational) else gr(coeff)
        return MultiPoly(self, {tuple(exps): coeff} if coeff else {})

    def from_terms(self, terms: Mapping[Exponents, GaussianRational]) -> "MultiPoly":
        return MultiPoly(self, {m: c for m, c in terms.items() if c})

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.names, order)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.names, self.order))

    def __repr__(self):
        return f"PolyRing({','.join(self.names)}; {self.order.tag()})"


class MultiPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- basics ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or self.terms.keys() == {self.ring._zero_exp}

    def const_value(self) -> GaussianRational:
        return self.terms.get(self.ring._zero_exp, ZERO)

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((m[i] for m in self.terms), default=-1)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.ring.names == other.ring.names and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.names, frozenset(self.terms.items())))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        return MultiPoly(self.ring, out)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            s = -c if s is None else s - c
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        return MultiPoly(self.ring, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.ring, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, GaussianRational)):
            return self.scale(other)
        out: dict = {}
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                c = c1 * c2
                s = out.get(m)
                s = c if s is None else s + c
                if s:
                    out[m] = s
                elif m in out:
                    del out[m]
        return MultiPoly(self.ring, out)

    __rmul__ = __mul__

    def scale(self, c) -> "MultiPoly":
        c = c if isinstance(c, GaussianRational) else gr(c)
        if not c:
            return self.ring.zero()
        return MultiPoly(self.ring, {m: c * v for m, v in self.terms.items()})

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ring.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def mul_term(self, exps: Exponents, coeff: GaussianRational) -> "MultiPoly":
        return MultiPoly(
            self.ring,
            {tuple(x + y for x, y in zip(m, exps)): c * coeff for m, c in self.terms.items()},
        )

    # -- leading data --------------------------------------------------------

    def leading_monomial(self) -> Exponents:
        return max(self.terms, key=self.ring.key)

    def leading_coeff(self) -> GaussianRational:
        return self.terms[self.leading_monomial()]

    def monic(self) -> "MultiPoly":
        if not self.terms:
            return self
        lc = self.leading_coeff()
        if lc == ONE:
            return self
        inv = lc.inv()
        return MultiPoly(self.ring, {m: c * inv for m, c in self.terms.items()})

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: self.ring.key(t[0]), reverse=True)

    # -- structure helpers -----------------------------------------------

    def coeff_of_power(self, i: int, d: int) -> "MultiPoly":
        """Coefficient of x_i^d, as a polynomial with x_i eliminated."""
        out = {}
        for m, c in self.terms.items():
            if m[i] == d:
                mm = m[:i] + (0,) + m[i + 1 :]
                out[mm] = out.get(mm, ZERO) + c
        return MultiPoly(self.ring, {m: c for m, c in out.items() if c})

    def leading_in_var(self, i: int) -> tuple[int, "MultiPoly"]:
        """(degree, leading coefficient) viewing self as polynomial in x_i."""
        d = self.degree_in(i)
        if d < 0:
            return -1, self.ring.zero()
        return d, self.coeff_of_power(i, d)

    def derivative(self, i: int) -> "MultiPoly":
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                mm = m[:i] + (m[i] - 1,) + m[i + 1 :]
                out[mm] = out.get(mm, ZERO) + c * m[i]
        return MultiPoly(self.ring, {m: c for m, c in out.items() if c})

    def eval(self, values: Sequence[GaussianRational]) -> GaussianRational:
        total = ZERO
        for m, c in self.terms.items():
            v = c
            for i, e in enumerate(m):
                if e:
                    v = v * values[i] ** e
            total = total + v
        return total

    def subs_var(self, i: int, value: GaussianRational) -> "MultiPoly":
        out: dict = {}
        powers = {0: ONE}
        for m, c in self.terms.items():
            e = m[i]
            if e not in powers:
                powers[e] = value**e
            mm = m[:i] + (0,) + m[i + 1 :]
            cc = c * powers[e]
            s = out.get(mm)
            s = cc if s is None else s + cc
            if s:
                out[mm] = s
            elif mm in out:
                del out[mm]
        return MultiPoly(self.ring, out)

    def permute_vars(self, perm: Sequence[int]) -> "MultiPoly":
        """Relabel variables: new exponent j comes from old exponent perm[j]."""
        return MultiPoly(
            self.ring, {tuple(m[perm[j]] for j in range(len(m))): c for m, c in self.terms.items()}
        )

    def is_symmetric(self) -> bool:
        n = self.ring.n
        if n < 2:
            return True
        swap = list(range(n))
        swap[0], swap[1] = 1, 0
        if self.permute_vars(swap) != self:
            return False
        cyc = [(j + 1) % n for j in range(n)]
        return self.permute_vars(cyc) == self

    def map_ring(self, ring: PolyRing, var_map: Sequence[int]) -> "MultiPoly":
        """Embed into ``ring``; old variable i becomes ring variable var_map[i]."""
        out = {}
        for m, c in self.terms.items():
            mm = [0] * ring.n
            for i, e in enumerate(m):
                if e:
                    mm[var_map[i]] += e
            key = tuple(mm)
            out[key] = out.get(key, ZERO) + c
        return MultiPoly(ring, {m: c for m, c in out.items() if c})

    # -- display -------------------------------------------------------------

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                f"{self.ring.names[i]}^{e}" if e > 1 else self.ring.names[i]
                for i, e in enumerate(m)
                if e
            )
            cs = str(c)
            if "+" in cs[1:] or "-" in cs[1:]:
                cs = f"({cs})"
            bits.append(f"{cs}*{mono}" if mono else cs)
        return " + ".join(bits)


def divide_by_linear_diff(p: MultiPoly, i: int, j: int) -> MultiPoly:
    """Exact division of p by (x_i - x_j); raises if the remainder is nonzero."""
    ring = p.ring
    d = p.degree_in(i)
    coeffs = [p.coeff_of_power(i, k) for k in range(d + 1)]
    xj = ring.var(j)
    quot = [ring.zero()] * max(d, 0)
    carry = ring.zero()
    for k in range(d, 0, -1):
        carry = coeffs[k] + carry
        quot[k - 1] = carry
        carry = carry * xj
    rem = coeffs[0] + carry if coeffs else carry
    if rem:
        raise ValueError("polynomial is not divisible by (x_i - x_j)")
    out = ring.zero()
    for k, q in enumerate(quot):
        out = out + q.mul_term(tuple(k if t == i else 0 for t in range(ring.n)), ONE)
    return out


def vandermonde(ring: PolyRing, nvars: int | None = None) -> MultiPoly:
    """Product of (x_j - x_k) over j < k for the first ``nvars`` variables."""
    n = ring.n if nvars is None else nvars
    out = ring.const(1)
    for j in range(n):
        for k in range(j + 1, n):
            out = out * (ring.var(j) - ring.var(k))
    return out


def poly_content_normalize(p: MultiPoly) -> MultiPoly:
    """Scale so the leading coefficient is 1 (canonical generator form)."""
    return p.monic()
