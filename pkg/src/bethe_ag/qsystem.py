"""Zero-remainder ideals of the rational Q-system for the brickwork chain.

The chain has 2L sites with alternating inhomogeneities -u/2, +u/2.  Working
with the Baxter polynomial Q(z) = z^M + sum c_k z^k, the QQ-ladder is run two
columns up with symbolic c's; demanding polynomial quotients at each step
produces the zero-remainder ideal in the c variables.  Every finite solution
is a physical Bethe solution.

Conventions established against the circuit Bethe equations (and checked by
the dense oracle in the tests):

* the boundary polynomial carries the half-shifted inhomogeneity roots,
  XXX:  Q00(z) = (z - u/2 + i/2)^L (z + u/2 + i/2)^L,
  XXZ:  P00(x) = ((qx - xi)(q xi x - 1))^L   in x = e^{2 rapidity};
* XXZ ladder steps are normalized to integer q powers,
  P_{1,s+1} = q^M P_{1,s}(x/q) - P_{1,s}(xq),
  P_{0,s+1} = [q^{2L-M} P+_{1,s+1} P-_{0,s} - P-_{1,s+1} P+_{0,s}] / P_{1,s};
* XXZ ideals adjoin a localization variable y with y*c_0 = 1, which removes
  the spurious x_j = 0 branch (saturation at c_0 != 0).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .cache import cached_context
from .errors import UnsupportedMomentum
from .exactmath import GaussianRational, MultiPoly, PolyRing, gr
from .exactmath.gaussian import I, ONE, ZERO
from .groebner import GroebnerContext, buchberger


@dataclass(frozen=True)
class ChainSpec:
    """Quantum numbers and seeded parameters of one circuit configuration.

    L is the half-system size (2L qubits), M the magnon number (= length of
    the spin string).  XXX uses the additive spectral parameter u; XXZ uses
    multiplicative seeds xi = e^u and q = e^eta.
    """

    L: int
    M: int
    model: str = "xxx"
    u: GaussianRational | None = None
    xi: GaussianRational | None = None
    q: GaussianRational | None = None

    def __post_init__(self):
        if self.model not in ("xxx", "xxz"):
            raise ValueError(f"unknown model {self.model!r}")
        if not 0 <= self.M <= self.L:
            raise ValueError("magnon number must satisfy 0 <= M <= L")
        if self.model == "xxx" and self.u is None:
            raise ValueError("xxx spec needs a u seed")
        if self.model == "xxz" and (self.xi is None or self.q is None):
            raise ValueError("xxz spec needs xi and q seeds")

    def sector(self, M: int) -> "ChainSpec":
        return replace(self, M=M)

    def gate_bc(self) -> tuple[GaussianRational, GaussianRational]:
        """Gate matrix elements b(u), c(u)."""
        if self.model == "xxx":
            den = (self.u + I).inv()
            return self.u * den, I * den
        xi2 = self.xi * self.xi
        den = (xi2 * self.q * self.q - ONE).inv()
        return self.q * (xi2 - ONE) * den, self.xi * (self.q * self.q - ONE) * den

    def label(self) -> str:
        if self.model == "xxx":
            return f"xxx(L={self.L},M={self.M},u={self.u})"
        return f"xxz(L={self.L},M={self.M},xi={self.xi},q={self.q})"


@dataclass(frozen=True)
class ZeroRemainderIdeal:
    spec: ChainSpec
    ring: PolyRing
    generators: tuple
    momentum: str | None = None  # None, "0" or "pi"


# ---------------------------------------------------------------------------
# dense polynomials in x with MultiPoly coefficients (the ladder workhorse)


def _xp_trim(p: list) -> list:
    while p and p[-1].is_zero():
        p.pop()
    return p


def _xp_add(a: list, b: list) -> list:
    n = max(len(a), len(b))
    zero = (a or b)[0].ring.zero()
    return _xp_trim(
        [(a[k] if k < len(a) else zero) + (b[k] if k < len(b) else zero) for k in range(n)]
    )


def _xp_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    zero = (a or b)[0].ring.zero()
    return _xp_trim(
        [(a[k] if k < len(a) else zero) - (b[k] if k < len(b) else zero) for k in range(n)]
    )


def _xp_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    zero = a[0].ring.zero()
    out = [zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b):
            if bj.is_zero():
                continue
            out[i + j] = out[i + j] + ai * bj
    return _xp_trim(out)


def _xp_scale_arg(a: list, lam: GaussianRational) -> list:
    """p(x) -> p(lam * x)."""
    out, pw = [], ONE
    for c in a:
        out.append(c.scale(pw))
        pw = pw * lam
    return _xp_trim(out)


def _xp_shift_arg(a: list, h: GaussianRational) -> list:
    """p(v) -> p(v + h), exact Taylor shift."""
    n = len(a)
    if n == 0:
        return []
    zero = a[0].ring.zero()
    out = [zero] * n
    from math import comb

    hp = [ONE]
    for _ in range(n - 1):
        hp.append(hp[-1] * h)
    for j, cj in enumerate(a):
        if cj.is_zero():
            continue
        for k in range(j + 1):
            out[k] = out[k] + cj.scale(hp[j - k] * comb(j, k))
    return _xp_trim(out)


def _xp_divmod(num: list, den: list) -> tuple[list, list]:
    """Division when den's leading coefficient is a nonzero constant."""
    if not den:
        raise ZeroDivisionError("division by zero ladder polynomial")
    lead = den[-1]
    if not lead.is_constant():
        raise ValueError("ladder divisor must have constant leading coefficient")
    inv = lead.const_value().inv()
    zero = den[0].ring.zero()
    rem = list(num)
    dd = len(den) - 1
    quot = [zero] * max(len(rem) - dd, 0)
    while len(rem) - 1 >= dd and rem:
        k = len(rem) - 1 - dd
        f = rem[-1].scale(inv)
        quot[k] = f
        for j, dj in enumerate(den):
            rem[k + j] = rem[k + j] - f * dj
        _xp_trim(rem)
    return quot, _xp_trim(rem)


# ---------------------------------------------------------------------------
# symmetric-function shorthands in the c ring


def c_ring(M: int, saturate: bool = False) -> PolyRing:
    names = tuple(f"c{k}" for k in range(M))
    if saturate:
        names = names + ("y",)
    return PolyRing(names)


def qc_eval(ring: PolyRing, M: int, s: GaussianRational) -> MultiPoly:
    """Q(s) = s^M + sum c_k s^k as an affine polynomial in the c's."""
    out = ring.const(s**M)
    for k in range(M):
        out = out + ring.var(k).scale(s**k)
    return out


def rc_eval(ring: PolyRing, M: int, s: GaussianRational) -> MultiPoly:
    """Reversed Baxter polynomial: s^M Q(1/s) = 1 + sum c_k s^{M-k}."""
    out = ring.const(1)
    for k in range(M):
        out = out + ring.var(k).scale(s ** (M - k))
    return out


def tau_mu_polys(spec: ChainSpec, ring: PolyRing) -> tuple[MultiPoly, MultiPoly, MultiPoly, MultiPoly]:
    """(tau_num, tau_den, mu_num, mu_den) as polynomials in the c variables."""
    M = spec.M
    if spec.model == "xxx":
        half = spec.u.scale(gr("1/2"))
        a = qc_eval(ring, M, half - I)
        b = qc_eval(ring, M, -half)
        c = qc_eval(ring, M, half)
        d = qc_eval(ring, M, -half - I)
        return a * b, c * d, c * b, a * d
    xi, q = spec.xi, spec.q
    q2 = q * q
    qa = qc_eval(ring, M, xi / q2)
    qb = qc_eval(ring, M, xi)
    ra = rc_eval(ring, M, xi)
    rb = rc_eval(ring, M, xi * q2)
    s = gr(q2**M)
    return (qa * ra).scale(s), qb * rb, qb * ra, (qa * rb).scale(s)


# ---------------------------------------------------------------------------
# the ladders


def _ladder_xxx(spec: ChainSpec, ring: PolyRing) -> list[MultiPoly]:
    M, L = spec.M, spec.L
    half_i = gr(0, "1/2")
    p10 = [ring.var(k) for k in range(M)] + [ring.const(1)]
    p11 = _xp_sub(_xp_shift_arg(p10, -half_i), _xp_shift_arg(p10, half_i))
    base = _xp_mul(
        [ring.const(half_i - spec.u.scale(gr("1/2"))), ring.const(1)],
        [ring.const(half_i + spec.u.scale(gr("1/2"))), ring.const(1)],
    )
    p00 = [ring.const(1)]
    for _ in range(L):
        p00 = _xp_mul(p00, base)
    n1 = _xp_sub(
        _xp_mul(_xp_shift_arg(p11, half_i), _xp_shift_arg(p00, -half_i)),
        _xp_mul(_xp_shift_arg(p11, -half_i), _xp_shift_arg(p00, half_i)),
    )
    q01, rem1 = _xp_divmod(n1, p10)
    gens = list(rem1)
    if len(p11) - 1 >= 1:
        p12 = _xp_sub(_xp_shift_arg(p11, -half_i), _xp_shift_arg(p11, half_i))
        n2 = _xp_sub(
            _xp_mul(_xp_shift_arg(p12, half_i), _xp_shift_arg(q01, -half_i)),
            _xp_mul(_xp_shift_arg(p12, -half_i), _xp_shift_arg(q01, half_i)),
        )
        _, rem2 = _xp_divmod(n2, p11)
        gens += list(rem2)
    return [g.monic() for g in gens if g]


def _ladder_xxz(spec: ChainSpec, ring: PolyRing) -> list[MultiPoly]:
    M, L = spec.M, spec.L
    xi, q = spec.xi, spec.q
    qM = gr(q**M)
    qinv = q.inv()
    p10 = [ring.var(k) for k in range(M)] + [ring.const(1)]
    p11 = _xp_sub(
        [c.scale(qM) for c in _xp_scale_arg(p10, qinv)], _xp_scale_arg(p10, q)
    )
    base = [ring.const(xi), ring.const(-q * (ONE + xi * xi)), ring.const(q * q * xi)]
    p00 = [ring.const(1)]
    for _ in range(L):
        p00 = _xp_mul(p00, base)
    pref = gr(q ** (2 * L - M))
    n1 = _xp_sub(
        [c.scale(pref) for c in _xp_mul(_xp_scale_arg(p11, q), _xp_scale_arg(p00, qinv))],
        _xp_mul(_xp_scale_arg(p11, qinv), _xp_scale_arg(p00, q)),
    )
    q01, rem1 = _xp_divmod(n1, p10)
    gens = list(rem1)
    if len(p11) - 1 >= 1:
        p12 = _xp_sub(
            [c.scale(qM) for c in _xp_scale_arg(p11, qinv)], _xp_scale_arg(p11, q)
        )
        n2 = _xp_sub(
            [c.scale(pref) for c in _xp_mul(_xp_scale_arg(p12, q), _xp_scale_arg(q01, qinv))],
            _xp_mul(_xp_scale_arg(p12, qinv), _xp_scale_arg(q01, q)),
        )
        _, rem2 = _xp_divmod(n2, p11)
        gens += list(rem2)
    return [g.monic() for g in gens if g]


def zero_remainder_ideal(spec: ChainSpec) -> ZeroRemainderIdeal:
    """Build the zero-remainder ideal for the spec's (L, M) sector."""
    M = spec.M
    if M == 0:
        return ZeroRemainderIdeal(spec=spec, ring=PolyRing(()), generators=())
    if spec.model == "xxx":
        ring = c_ring(M)
        gens = _ladder_xxx(spec, ring)
    else:
        ring = c_ring(M, saturate=True)
        gens = _ladder_xxz(spec, ring)
        gens.append(ring.var(M) * ring.var(0) - ring.const(1))
    return ZeroRemainderIdeal(spec=spec, ring=ring, generators=tuple(gens))


def momentum_constrain(ideal: ZeroRemainderIdeal, q0: str) -> ZeroRemainderIdeal:
    """Restrict to the quasi-momentum sector Q0 in {0, pi}: mu = e^{i Q0}."""
    q0 = str(q0)
    if q0 not in ("0", "pi"):
        raise UnsupportedMomentum(f"Q0 must be 0 or pi, got {q0!r}")
    if ideal.spec.M == 0:
        return replace(ideal, momentum=q0)
    _, _, mu_num, mu_den = tau_mu_polys(ideal.spec, ideal.ring)
    phase = ONE if q0 == "0" else -ONE
    gen = (mu_num - mu_den.scale(phase)).monic()
    gens = ideal.generators + ((gen,) if gen else ())
    return replace(ideal, generators=gens, momentum=q0)


def ideal_context(ideal: ZeroRemainderIdeal) -> GroebnerContext:
    """Groebner context of the ideal, via the on-disk/in-memory cache."""
    return cached_context(list(ideal.generators), ideal.ring)


def count_solutions(ideal: ZeroRemainderIdeal) -> int:
    return ideal_context(ideal).dimension
