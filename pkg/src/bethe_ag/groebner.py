"""Buchberger Groebner bases over Q(i), quotient bases, companion matrices.

The solver backbone: a reduced Groebner basis fixes a canonical basis of
standard monomials for the quotient ring of a zero-dimensional ideal.
Multiplication by any polynomial then becomes a finite exact matrix (its
companion matrix), and sums of a rational function over all solutions of the
system reduce to tr(M_num . M_den^{-1}) without ever solving the equations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InconsistentIdeal, NotZeroDimensional, SingularMatrix
from .exactmath import ExactMatrix, GaussianRational, MultiPoly, PolyRing, mat_inverse, trace_product
from .exactmath.gaussian import ONE, ZERO


def _divides(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def _mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def _disjoint(a: tuple, b: tuple) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


class _Reducer:
    """Reduction against a fixed list of monic polynomials."""

    def __init__(self, ring: PolyRing, polys: Sequence[MultiPoly]):
        self.ring = ring
        self.key = ring.key
        # (leading monomial, terms dict) with monic leading coefficient
        self.data = [(p.leading_monomial(), p.terms) for p in polys]

    def find(self, m: tuple):
        for lt, terms in self.data:
            if _divides(lt, m):
                return lt, terms
        return None

    def normal_form(self, p: MultiPoly) -> MultiPoly:
        key = self.key
        work = dict(p.terms)
        out: dict = {}
        while work:
            m = max(work, key=key)
            c = work.pop(m)
            hit = self.find(m)
            if hit is None:
                out[m] = c
                continue
            lt, terms = hit
            shift = _sub(m, lt)
            for gm, gc in terms.items():
                if gm == lt:
                    continue
                mm = _mul(gm, shift)
                s = work.get(mm)
                s = -(c * gc) if s is None else s - c * gc
                if s:
                    work[mm] = s
                elif mm in work:
                    del work[mm]
        return MultiPoly(self.ring, out)


def _spoly(f: MultiPoly, g: MultiPoly, ring: PolyRing) -> MultiPoly:
    lf, lg = f.leading_monomial(), g.leading_monomial()
    l = _lcm(lf, lg)
    a = f.mul_term(_sub(l, lf), g.terms[lg])
    b = g.mul_term(_sub(l, lg), f.terms[lf])
    return a - b


def buchberger_basis(gens: Sequence[MultiPoly], ring: PolyRing) -> list[MultiPoly]:
    """Reduced Groebner basis (monic, canonical) of the given generators.

    Buchberger with the Gebauer-Moeller pair elimination ("update" of
    Becker-Weispfenning, p. 230) and normal selection: the pending pair with
    the smallest lcm is processed first.  Deterministic for a fixed input.
    """
    key = ring.key
    f: list[MultiPoly] = []  # all polynomials ever added; stable indices
    lm: list[tuple] = []
    seeds = []
    for g in gens:
        if g:
            g = g.monic()
            if g not in seeds:
                seeds.append(g)
    if not seeds:
        return []
    seeds.sort(key=lambda p: key(p.leading_monomial()))

    def update(G: set, B: set, ih: int) -> tuple[set, set]:
        mh = lm[ih]
        C = set(G)
        D: set[tuple[int, int]] = set()
        while C:
            ig = C.pop()
            lcm_hg = _lcm(lm[ig], mh)
            if _disjoint(lm[ig], mh) or (
                not any(_divides(_lcm(lm[ix], mh), lcm_hg) for ix in C)
                and not any(_divides(_lcm(lm[p[1]], mh), lcm_hg) for p in D)
            ):
                D.add((ih, ig))
        E = {(ih, ig) for (ih, ig) in D if not _disjoint(lm[ig], mh)}
        B_new = set()
        for ig1, ig2 in B:
            lcm12 = _lcm(lm[ig1], lm[ig2])
            if (
                not _divides(mh, lcm12)
                or _lcm(lm[ig1], mh) == lcm12
                or _lcm(lm[ig2], mh) == lcm12
            ):
                B_new.add((ig1, ig2))
        B_new |= E
        G_new = {ig for ig in G if not _divides(mh, lm[ig])}
        G_new.add(ih)
        return G_new, B_new

    G: set[int] = set()
    B: set[tuple[int, int]] = set()
    for g in seeds:
        f.append(g)
        lm.append(g.leading_monomial())
        G, B = update(G, B, len(f) - 1)

    while B:
        pair = min(B, key=lambda p: key(_lcm(lm[p[0]], lm[p[1]])))
        B.discard(pair)
        s = _spoly(f[pair[0]], f[pair[1]], ring)
        if not s:
            continue
        h = _Reducer(ring, [f[i] for i in sorted(G)]).normal_form(s)
        if h:
            f.append(h.monic())
            lm.append(h.leading_monomial())
            G, B = update(G, B, len(f) - 1)

    return interreduce([f[i] for i in sorted(G)], ring)


def interreduce(basis: Sequence[MultiPoly], ring: PolyRing) -> list[MultiPoly]:
    """Minimize and fully reduce a Groebner basis; canonical output order."""
    key = ring.key
    polys = [p.monic() for p in basis if p]
    # minimal: remove any element whose LT is divisible by another LT
    polys.sort(key=lambda p: key(p.leading_monomial()))
    minimal: list[MultiPoly] = []
    lts: list[tuple] = []
    for p in polys:
        lt = p.leading_monomial()
        if not any(_divides(l, lt) for l in lts):
            minimal.append(p)
            lts.append(lt)
    # reduced: replace each element by its NF against the others
    out = []
    for i, p in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        r = _Reducer(ring, others).normal_form(p) if others else p
        if r:
            out.append(r.monic())
    out.sort(key=lambda p: key(p.leading_monomial()), reverse=True)
    return out


@dataclass(frozen=True)
class GroebnerContext:
    """Reduced basis plus the standard-monomial quotient basis."""

    ring: PolyRing
    generators: tuple
    basis: tuple
    quotient_basis: tuple  # exponent tuples, descending in the ring order

    @property
    def dimension(self) -> int:
        return len(self.quotient_basis)

    def normal_form(self, p: MultiPoly) -> MultiPoly:
        return _Reducer(self.ring, self.basis).normal_form(p)


def buchberger(gens: Sequence[MultiPoly], ring: PolyRing | None = None) -> GroebnerContext:
    """Compute a GroebnerContext; raises InconsistentIdeal when basis = {1}."""
    if ring is None:
        if not gens:
            raise ValueError("no generators and no ring")
        ring = gens[0].ring
    basis = buchberger_basis(gens, ring)
    if len(basis) == 1 and basis[0].is_constant():
        raise InconsistentIdeal("Groebner basis is {1}: no solutions")
    qb = quotient_basis(basis, ring)
    return GroebnerContext(ring=ring, generators=tuple(gens), basis=tuple(basis), quotient_basis=qb)


def quotient_basis(basis: Sequence[MultiPoly], ring: PolyRing) -> tuple:
    """Standard monomials (not divisible by any basis LT), descending order.

    Zero-dimensionality test: every variable must appear as a pure power
    among the leading terms.
    """
    lts = [p.leading_monomial() for p in basis]
    bounds = []
    for v in range(ring.n):
        cap = None
        for lt in lts:
            if lt[v] and all(e == 0 for i, e in enumerate(lt) if i != v):
                cap = lt[v] if cap is None else min(cap, lt[v])
        if cap is None:
            raise NotZeroDimensional(
                f"no pure power of {ring.names[v]} among leading terms"
            )
        bounds.append(cap)
    std = []
    for exps in itertools.product(*(range(b) for b in bounds)):
        if not any(_divides(lt, exps) for lt in lts):
            std.append(exps)
    std.sort(key=ring.key, reverse=True)
    return tuple(std)


def normal_form(p: MultiPoly, ctx: GroebnerContext) -> MultiPoly:
    return ctx.normal_form(p)


@dataclass(frozen=True)
class CompanionMatrix:
    poly: str
    matrix: ExactMatrix


def companion(p: MultiPoly, ctx: GroebnerContext) -> CompanionMatrix:
    """Matrix of multiplication-by-p on the quotient ring.

    Column i holds the coordinates of NF(p * b_i) in the standard-monomial
    basis, matching M[j][i] = coeff of b_j in p * b_i.
    """
    qb = ctx.quotient_basis
    index = {m: j for j, m in enumerate(qb)}
    n = len(qb)
    red = _Reducer(ctx.ring, ctx.basis)
    cols = []
    for m in qb:
        nf = red.normal_form(p.mul_term(m, ONE))
        col = [ZERO] * n
        for mm, c in nf.terms.items():
            col[index[mm]] = c
        cols.append(col)
    return CompanionMatrix(poly=repr(p), matrix=ExactMatrix(list(zip(*cols))))


def trace_sum(num: MultiPoly, den: MultiPoly, ctx: GroebnerContext) -> GaussianRational:
    """Sum of num/den over all solutions (with multiplicity) of the ideal."""
    mn = companion(num, ctx).matrix
    if den.is_constant():
        return mn.trace() / den.const_value()
    md = companion(den, ctx).matrix
    return trace_product(mn, mat_inverse(md))
