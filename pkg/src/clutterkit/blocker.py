"""Exact blocker computation and transversal predicates.

The blocker of a clutter is the clutter of its inclusion-minimal
transversals.  It is computed by folding the edges one at a time: the
running family holds the minimal transversals of the edges seen so far;
a new edge keeps every set that already meets it and extends each of the
others by a single vertex of the edge, pruning non-minimal results.
Blocking is an involution, swaps deletion with contraction and join with
meet; the property suite in the test tree exercises all of these.
"""
from __future__ import annotations

from typing import Iterable

from .core import Clutter, ONE
from .errors import ResourceLimitError

DEFAULT_EDGE_BUDGET = 10**6


def is_transversal(h: Clutter, t: Iterable[int]) -> bool:
    """True iff t meets every edge of h.

    Every set is a transversal of the edgeless clutter; no set is a
    transversal of the clutter whose only edge is empty.
    """
    ts = frozenset(t)
    return all(ts & s for s in h.edge_sets)


def blocker(h: Clutter, *, edge_budget: int = DEFAULT_EDGE_BUDGET) -> Clutter:
    """The clutter of all minimal transversals of h.

    Intermediate families can outgrow the final result; if one exceeds
    edge_budget sets a ResourceLimitError is raised instead of exhausting
    memory.  Output is canonical and deterministic.
    """
    if h.is_zero:
        return ONE
    verts = h.vertices
    pos = {v: i for i, v in enumerate(verts)}
    family = [0]
    for edge in h.edges:
        mask = 0
        for v in edge:
            mask |= 1 << pos[v]
        hitters, movers = [], []
        for t in family:
            (hitters if t & mask else movers).append(t)
        bits = [1 << pos[v] for v in edge]
        cands = sorted({t | b for t in movers for b in bits},
                       key=lambda c: (c.bit_count(), c))
        kept: list[int] = []
        for c in cands:
            if any(w & c == w for w in hitters):
                continue
            if any(w & c == w for w in kept):
                continue
            kept.append(c)
        family = hitters + kept
        if len(family) > edge_budget:
            raise ResourceLimitError(
                f"blocker intermediate family exceeded {edge_budget} sets"
            )
    return Clutter._from_antichain(
        frozenset(v for v, i in pos.items() if t >> i & 1) for t in family
    )


def maximal_independent_sets(
    h: Clutter, *, edge_budget: int = DEFAULT_EDGE_BUDGET
) -> tuple[tuple[int, ...], ...]:
    """All maximal sets of vertices containing no edge of h.

    These are exactly the complements, within the vertex set of h, of the
    minimal transversals.  Isolated vertices outside the edges of h are
    not modeled.
    """
    verts = set(h.vertices)
    sets = [tuple(sorted(verts - set(b))) for b in blocker(h, edge_budget=edge_budget)]
    return tuple(sorted(sets, key=lambda e: (len(e), e)))
