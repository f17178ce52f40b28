"""Randomized identity suite for the clutter algebra.

Checks, on seeded random inputs, that single-vertex minors commute, that
join and meet form a bounded distributive lattice with prime top and
bottom, and that the blocker swaps each operation with its dual.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .blocker import blocker
from .core import Clutter, ONE, ZERO


@dataclass(frozen=True)
class LawResult:
    name: str
    ok: bool
    samples: int
    detail: str | None = None


def _sample(rng: random.Random, max_vertices: int, max_edges: int, max_rank: int) -> Clutter:
    roll = rng.random()
    if roll < 0.03:
        return ZERO
    if roll < 0.06:
        return ONE
    n = rng.randint(1, max_vertices)
    edges = []
    for _ in range(rng.randint(1, max_edges)):
        size = rng.randint(1, min(max_rank, n))
        edges.append(rng.sample(range(1, n + 1), size))
    return Clutter(edges)


def run_law_suite(
    samples: int = 500,
    seed: int = 0,
    *,
    max_vertices: int = 8,
    max_edges: int = 6,
    max_rank: int = 4,
) -> list[LawResult]:
    """Run every law on `samples` random inputs; one result per law."""
    rng = random.Random(seed)
    names = [
        "deletion and contraction commute",
        "bounded distributive lattice",
        "top and bottom are prime",
        "blocker is an involution",
        "blocker swaps deletion and contraction",
        "blocker swaps join and meet",
        "blocker swaps the minor roles",
        "join distributes over single-vertex minors",
    ]
    failures: dict[str, str] = {}

    def record(name: str, ok: bool, ctx: str):
        if not ok and name not in failures:
            failures[name] = ctx

    if blocker(ZERO) != ONE:
        failures[names[3]] = "blocker of the edgeless clutter is not the unit"

    for _ in range(samples):
        f = _sample(rng, max_vertices, max_edges, max_rank)
        g = _sample(rng, max_vertices, max_edges, max_rank)
        h = _sample(rng, max_vertices, max_edges, max_rank)
        u, v = rng.sample(range(1, max_vertices + 3), 2)
        pool = list(range(1, max_vertices + 3))
        rng.shuffle(pool)
        cut = rng.randint(0, 3)
        s, t = pool[:cut], pool[cut : cut + rng.randint(0, 3)]
        ctx = f"f={f!r} g={g!r} h={h!r} u={u} v={v} s={s} t={t}"

        record(names[0],
               h.delete(v).delete(u) == h.delete(u).delete(v)
               and h.delete(v).contract(u) == h.contract(u).delete(v)
               and h.contract(v).contract(u) == h.contract(u).contract(v),
               ctx)
        record(names[1],
               f | g == g | f
               and f & g == g & f
               and (f | (g | h)) == ((f | g) | h)
               and (f & (g & h)) == ((f & g) & h)
               and (f | (f & g)) == f
               and (f & (f | g)) == f
               and (f | ZERO) == f
               and (f & ONE) == f
               and (f & (g | h)) == ((f & g) | (f & h))
               and (f | (g & h)) == ((f | g) & (f | h)),
               ctx)
        record(names[2],
               ((f | g).is_one) == (f.is_one or g.is_one)
               and ((f & g).is_zero) == (f.is_zero or g.is_zero),
               ctx)
        record(names[3], blocker(blocker(h)) == h, ctx)
        record(names[4],
               blocker(h.delete(v)) == blocker(h).contract(v)
               and blocker(h.contract(v)) == blocker(h).delete(v),
               ctx)
        record(names[5],
               blocker(f | g) == blocker(f) & blocker(g)
               and blocker(f & g) == blocker(f) | blocker(g),
               ctx)
        record(names[6], blocker(h.restrict(s, t)) == blocker(h).restrict(t, s), ctx)
        record(names[7],
               (f | g).delete(v) == f.delete(v) | g.delete(v)
               and (f | g).contract(v) == f.contract(v) | g.contract(v),
               ctx)

    return [
        LawResult(name, name not in failures, samples, failures.get(name))
        for name in names
    ]
