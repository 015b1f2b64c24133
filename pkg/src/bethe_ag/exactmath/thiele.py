"""Thiele continued-fraction rational interpolation over Q(i)."""

from __future__ import annotations

from typing import Sequence

from ..errors import InterpolationBreakdown
from .gaussian import GaussianRational
from .unipoly import RatFun, UniPoly


def thiele_interpolate(points: Sequence[tuple[GaussianRational, GaussianRational]]) -> RatFun:
    """Minimal-degree rational interpolant through the given points.

    Builds reciprocal differences r(x) = a0 + (x-x0)/(a1 + (x-x1)/(...)),
    stopping early when the remaining points are already matched.  Raises
    InterpolationBreakdown on a zero reciprocal difference; the caller is
    expected to re-seed with different sample points.
    """
    if not points:
        raise ValueError("no interpolation points")
    xs = [p[0] for p in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation points must have distinct x values")

    levels: list[GaussianRational] = []
    nodes: list[GaussianRational] = []
    work = list(points)
    while True:
        a = work[0][1]
        levels.append(a)
        nodes.append(work[0][0])
        rest = work[1:]
        if not rest:
            break
        nxt = []
        for x, v in rest:
            diff = v - a
            if not diff:
                # This point already agrees with the truncated fraction at
                # this level; a division here would break down.  Defer the
                # decision to the final verification.
                continue
            nxt.append((x, (x - work[0][0]) / diff))
        if not nxt:
            break
        if len(nxt) < len(rest):
            # Mixed exact matches and fresh data at one level mean the
            # sample set is degenerate for a single continued fraction.
            r = _assemble(levels, nodes)
            if _matches_all(r, points):
                return r
            raise InterpolationBreakdown("degenerate reciprocal differences")
        work = nxt

    r = _assemble(levels, nodes)
    if not _matches_all(r, points):
        raise InterpolationBreakdown("continued fraction does not reproduce the samples")
    return r


def _assemble(levels: Sequence[GaussianRational], nodes: Sequence[GaussianRational]) -> RatFun:
    # Bottom-up: value = a_k, then value = a_j + (x - x_j)/value.
    num = UniPoly.const(levels[-1])
    den = UniPoly([1])
    for j in range(len(levels) - 2, -1, -1):
        xm = UniPoly([-nodes[j], 1])
        num, den = UniPoly.const(levels[j]) * num + xm * den, num
    return RatFun(num, den)


def _matches_all(r: RatFun, points) -> bool:
    for x, y in points:
        d = r.den.eval(x)
        if not d or r.num.eval(x) != y * d:
            return False
    return True
