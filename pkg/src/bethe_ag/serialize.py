"""JSON encodings for polynomials, rational functions, and results.

Polynomials serialize as {"vars": [...], "terms": [[e1..en, re_num, re_den,
im_num, im_den], ...]} with decimal strings for the big integers.
"""

from __future__ import annotations

from typing import Sequence

from .exactmath import GaussianRational, MultiPoly, PolyRing, RatFun, UniPoly


def multipoly_to_json(p: MultiPoly) -> dict:
    terms = []
    for m, c in p.sorted_terms():
        terms.append([*map(int, m), *c.json_parts()])
    return {"vars": list(p.ring.names), "terms": terms}


def multipoly_from_json(data: dict, ring: PolyRing | None = None) -> MultiPoly:
    names = tuple(data["vars"])
    if ring is None:
        ring = PolyRing(names)
    elif ring.names != names:
        raise ValueError("variable names do not match the target ring")
    n = len(names)
    terms = {}
    for row in data["terms"]:
        exps = tuple(int(e) for e in row[:n])
        terms[exps] = GaussianRational.from_json_parts(row[n : n + 4])
    return ring.from_terms(terms)


def unipoly_to_json(p: UniPoly, var: str = "x") -> dict:
    return {
        "vars": [var],
        "terms": [[k, *c.json_parts()] for k, c in enumerate(p.coeffs) if c],
    }


def unipoly_from_json(data: dict) -> UniPoly:
    coeffs: dict[int, GaussianRational] = {}
    for row in data["terms"]:
        coeffs[int(row[0])] = GaussianRational.from_json_parts(row[1:5])
    n = max(coeffs) + 1 if coeffs else 0
    from .exactmath.gaussian import ZERO

    return UniPoly([coeffs.get(k, ZERO) for k in range(n)])


def ratfun_to_json(r: RatFun, var: str = "x") -> dict:
    return {"num": unipoly_to_json(r.num, var), "den": unipoly_to_json(r.den, var)}


def ratfun_from_json(data: dict) -> RatFun:
    return RatFun(unipoly_from_json(data["num"]), unipoly_from_json(data["den"]))


def gr_to_str(c: GaussianRational) -> str:
    return str(c)
