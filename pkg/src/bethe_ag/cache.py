"""Content-addressed cache for Groebner contexts.

Keys are a hash of (generators, monomial order), so an expensive basis run
is reused across processes.  The directory comes from the BETHE_AG_CACHE
environment variable; without it only the in-process cache is used.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path
from typing import Sequence

from .exactmath import MultiPoly, PolyRing
from .groebner import GroebnerContext, buchberger
from .serialize import multipoly_from_json, multipoly_to_json

_MEMORY: dict[str, GroebnerContext] = {}


def context_key(gens: Sequence[MultiPoly], ring: PolyRing) -> str:
    payload = json.dumps(
        {
            "vars": ring.names,
            "order": ring.order.tag(),
            "gens": sorted(json.dumps(multipoly_to_json(g), sort_keys=True) for g in gens),
        },
        sort_keys=True,
    )
    return hashlib.sha256(payload.encode()).hexdigest()


def cache_dir() -> Path | None:
    d = os.environ.get("BETHE_AG_CACHE")
    return Path(d) if d else None


def cached_context(gens: Sequence[MultiPoly], ring: PolyRing) -> GroebnerContext:
    key = context_key(gens, ring)
    ctx = _MEMORY.get(key)
    if ctx is not None:
        return ctx
    d = cache_dir()
    path = d / f"{key}.json" if d else None
    if path and path.exists():
        ctx = _context_from_json(json.loads(path.read_text()), ring, gens)
        _MEMORY[key] = ctx
        return ctx
    ctx = buchberger(list(gens), ring)
    _MEMORY[key] = ctx
    if path:
        d.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(_context_to_json(ctx), sort_keys=True))
        tmp.replace(path)
    return ctx


def _context_to_json(ctx: GroebnerContext) -> dict:
    return {
        "vars": ctx.ring.names,
        "order": ctx.ring.order.tag(),
        "generators": [multipoly_to_json(g) for g in ctx.generators],
        "basis": [multipoly_to_json(g) for g in ctx.basis],
        "quotient_basis": [list(m) for m in ctx.quotient_basis],
    }


def _context_from_json(data: dict, ring: PolyRing, gens: Sequence[MultiPoly]) -> GroebnerContext:
    basis = tuple(multipoly_from_json(b, ring) for b in data["basis"])
    qb = tuple(tuple(m) for m in data["quotient_basis"])
    return GroebnerContext(ring=ring, generators=tuple(gens), basis=basis, quotient_basis=qb)
