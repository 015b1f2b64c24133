"""Brute-force verification: exact dense simulation and B-operator states.

State vectors are dense lists of GaussianRational of length 2^(2L); site 1
is the most significant bit.  Everything is exact, so pipeline/oracle
agreement can be asserted as equality rather than closeness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from gmpy2 import isqrt, mpq, mpz

from .exactmath import GaussianRational, ExactMatrix, gr
from .exactmath.gaussian import I, ONE, ZERO
from .qsystem import ChainSpec

MAX_QUBITS = 14


@dataclass(frozen=True)
class GateParams:
    """Two-site gate data derived from a spec; b + c*... per the Rcheck matrix."""

    model: str
    b: GaussianRational
    c: GaussianRational

    @staticmethod
    def from_spec(spec: ChainSpec) -> "GateParams":
        b, c = spec.gate_bc()
        return GateParams(model=spec.model, b=b, c=c)

    def angles(self) -> tuple[complex, complex]:
        """Float (alpha, phi) with tan(alpha) = -i sinh u / sinh eta and
        e^{-2 i phi} = -sinh(u - eta)/sinh(u + eta); diagnostic only."""
        import cmath

        b, c = self.b.to_complex(), self.c.to_complex()
        # b/c = sinh u / sinh eta = i tan(alpha); e^{-i phi} cos(alpha) = c
        alpha = cmath.atan(b / (1j * c))
        phi = 1j * cmath.log(c / cmath.cos(alpha))
        return alpha, phi


def _check_size(n_sites: int) -> None:
    if n_sites > MAX_QUBITS:
        raise ValueError(f"dense oracle capped at {MAX_QUBITS} qubits")


def zero_state(n_sites: int, zero=ZERO, one=ONE) -> list:
    state = [zero] * (1 << n_sites)
    state[0] = one
    return state


def basis_index(bits: Sequence[int]) -> int:
    idx = 0
    for b in bits:
        idx = (idx << 1) | b
    return idx


def string_state_index(n_sites: int, start: int, length: int) -> int:
    """Index of sigma^x_{start+1..start+length} |Omega>; sites wrap mod 2L."""
    bits = [0] * n_sites
    for j in range(length):
        bits[(start + j) % n_sites] = 1
    return basis_index(bits)


def apply_gate(state: list, n_sites: int, i: int, j: int, b, c, zero=ZERO) -> list:
    """Apply the Rcheck gate to (site i, site j), 1-based sites."""
    pi = n_sites - i
    pj = n_sites - j
    mi, mj = 1 << pi, 1 << pj
    out = list(state)
    for idx in range(len(state)):
        if idx & mi or not idx & mj:
            continue
        # idx has (site_i, site_j) = (0, 1); partner has (1, 0)
        part = (idx | mi) & ~mj
        a01, a10 = state[idx], state[part]
        if a01 == zero and a10 == zero:
            continue
        out[idx] = c * a01 + b * a10
        out[part] = b * a01 + c * a10
    return out


def apply_circuit(state: list, params: GateParams, n: int, n_sites: int | None = None) -> list:
    """n brickwork steps: odd layer (1,2)(3,4)... then even layer (2,3)...(2L,1)."""
    if n_sites is None:
        n_sites = (len(state)).bit_length() - 1
    _check_size(n_sites)
    b, c = params.b, params.c
    for _ in range(n):
        for i in range(1, n_sites, 2):
            state = apply_gate(state, n_sites, i, i + 1, b, c)
        for i in range(2, n_sites, 2):
            state = apply_gate(state, n_sites, i, i + 1, b, c)
        state = apply_gate(state, n_sites, n_sites, 1, b, c)
    return state


def domain_wall_state(n_sites: int, n_walls: int) -> list:
    state = [ZERO] * (1 << n_sites)
    state[string_state_index(n_sites, 0, n_walls)] = ONE
    return state


def dimer_state(n_sites: int) -> list:
    """prod_j (sigma^x_{2j-1} - sigma^x_{2j}) |Omega>: (|10> - |01>)^(x L)."""
    state = [ZERO] * (1 << n_sites)
    L = n_sites // 2
    for pattern in range(1 << L):
        bits = []
        sign = 1
        for p in range(L):
            if (pattern >> p) & 1:
                bits += [0, 1]
                sign = -sign
            else:
                bits += [1, 0]
        state[basis_index(bits)] = gr(sign)
    return state


def simulate_correlator(spec: ChainSpec, n: int, k: int = 0, init: str = "domainwall") -> GaussianRational:
    """<string shifted by 2k sites| U^n |string>, exact."""
    n_sites = 2 * spec.L
    _check_size(n_sites)
    params = GateParams.from_spec(spec)
    if init == "domainwall":
        state = domain_wall_state(n_sites, spec.M)
        state = apply_circuit(state, params, n, n_sites)
        return state[string_state_index(n_sites, (2 * k) % n_sites, spec.M)]
    if init == "dimer":
        bra = dimer_state(n_sites)
        state = apply_circuit(list(bra), params, n, n_sites)
        total = ZERO
        for a, b_ in zip(bra, state):
            if a and b_:
                total = total + a * b_
        return total
    raise ValueError(f"unknown initial state {init!r}")


def simulate_correlator_bc(L: int, M: int, n: int, k: int = 0):
    """Same correlator but with symbolic gate entries: a polynomial in (b, c)."""
    from .exactmath import PolyRing

    n_sites = 2 * L
    _check_size(n_sites)
    ring = PolyRing(("b", "c"))
    b, c = ring.var(0), ring.var(1)
    zero, one = ring.zero(), ring.const(1)
    state = [zero] * (1 << n_sites)
    state[string_state_index(n_sites, 0, M)] = one
    for _ in range(n):
        for i in range(1, n_sites, 2):
            state = apply_gate(state, n_sites, i, i + 1, b, c, zero=zero)
        for i in range(2, n_sites, 2):
            state = apply_gate(state, n_sites, i, i + 1, b, c, zero=zero)
        state = apply_gate(state, n_sites, n_sites, 1, b, c, zero=zero)
    return state[string_state_index(n_sites, (2 * k) % n_sites, M)]


# ---------------------------------------------------------------------------
# algebraic Bethe ansatz machinery (monodromy built from R matrices)


def _sqrt_mpq(x: mpq) -> mpq:
    num, den = mpz(x.numerator), mpz(x.denominator)
    if num < 0:
        raise ValueError("negative rational has no rational square root")
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise ValueError(f"{x} is not a perfect square")
    return mpq(rn, rd)


def gr_sqrt(z: GaussianRational) -> GaussianRational:
    """Exact square root in Q(i) when it exists (tests pick perfect squares)."""
    if not z.im:
        if z.re >= 0:
            return gr(_sqrt_mpq(z.re))
        return gr(0, _sqrt_mpq(-z.re))
    s = _sqrt_mpq(z.norm())
    a2 = (z.re + s) / 2
    a = _sqrt_mpq(a2)
    if not a:
        raise ValueError(f"{z} is not a perfect square in Q(i)")
    b = z.im / (2 * a)
    return gr(a, b)


def _site_rb_rc(spec: ChainSpec, root, site: int) -> tuple[GaussianRational, GaussianRational]:
    """R-matrix entries b(v - theta_j), c(v - theta_j) at one chain site.

    XXX roots are additive rapidities; XXZ roots are multiplicative x = e^{2u}
    and must be perfect squares (amplitudes involve e^{u}).
    """
    odd = site % 2 == 1  # theta = -u/2 on odd sites, +u/2 on even
    if spec.model == "xxx":
        w = root + spec.u.scale(gr("1/2")) if odd else root - spec.u.scale(gr("1/2"))
        den = (w + I).inv()
        return w * den, I * den
    q = spec.q
    sig = gr_sqrt(spec.xi)
    s = gr_sqrt(root)
    W = root * spec.xi if odd else root / spec.xi
    Wh = s * sig if odd else s / sig
    den = (W * q * q - ONE).inv()
    return q * (W - ONE) * den, Wh * (q * q - ONE) * den


def _apply_monodromy(spec: ChainSpec, root, state: list, transpose_chain: bool) -> tuple[list, list]:
    """Apply M_0(root) = R_01 ... R_0,2L to |aux> x |state>.

    Returns (w0, w1): chain vectors for aux component 0 and 1 after feeding
    aux in from ``state``'s pairing; callers pick entries A, B, C, D.
    """
    n_sites = 2 * spec.L
    dim = 1 << n_sites
    # w[a] = chain vector paired with auxiliary basis state a
    w = [[ZERO] * dim, [None, None]]
    return w  # replaced below; kept for smaller diffs


def monodromy_entry_apply(spec: ChainSpec, root, entry: str, state: list) -> list:
    """Apply A, B, C or D (monodromy matrix entries) to a chain state.

    The product R_01 ... R_0,2L acts right to left; the partial chain
    transpose used for dual states is handled by ``entry`` in {'Bt','Ct'}:
    those apply the transposed operator B^T, C^T.
    """
    n_sites = 2 * spec.L
    _check_size(n_sites)
    dim = 1 << n_sites
    transpose = entry.endswith("t")
    base = entry[0]
    aux_in = {"A": 0, "B": 1, "C": 0, "D": 1}[base]
    aux_out = {"A": 0, "B": 0, "C": 1, "D": 1}[base]
    if transpose:
        aux_in, aux_out = aux_out, aux_in
    w = [[ZERO] * dim, [ZERO] * dim]
    w[aux_in] = list(state)
    for site in range(n_sites, 0, -1):
        rb, rc = _site_rb_rc(spec, root, site)
        pos = n_sites - site
        mask = 1 << pos
        w0, w1 = w
        nw0, nw1 = list(w0), list(w1)
        if not transpose:
            # R: |0 s1> -> b |0 s1> + c |1 s0>, |1 s0> -> c |0 s1> + b |1 s0>
            for idx in range(dim):
                if idx & mask:  # site bit 1: pairs (aux0, s=1) <-> (aux1, s=0)
                    part = idx & ~mask
                    a01, a10 = w0[idx], w1[part]
                    if a01 == ZERO and a10 == ZERO:
                        continue
                    nw0[idx] = rb * a01 + rc * a10
                    nw1[part] = rc * a01 + rb * a10
        else:
            # chain-partial transpose: swaps which site bit pairs with aux
            for idx in range(dim):
                if not idx & mask:  # pairs (aux0, s=0) <-> (aux1, s=1)
                    part = idx | mask
                    a00, a11 = w0[idx], w1[part]
                    if a00 == ZERO and a11 == ZERO:
                        continue
                    nw0[idx] = a00 + rc * a11 if False else a00  # replaced below
        w = [nw0, nw1]
    return w[aux_out]
