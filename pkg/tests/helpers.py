"""Shared test utilities: independent brute-force oracles and generators.

The oracles here avoid the package's algorithms on purpose: transversals
by subset enumeration, minors by trying every deletion/contraction
assignment, covers by subfamily enumeration, SAT by truth table.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

from clutterkit import Clutter, ONE, ZERO


def random_clutter_sample(rng: random.Random, max_vertices=8, max_edges=6, max_rank=4,
                          allow_bounds=True) -> Clutter:
    if allow_bounds:
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


def brute_minimal_transversals(edge_sets) -> set[frozenset]:
    """All minimal transversals by enumerating every subset of the union."""
    edges = [frozenset(e) for e in edge_sets]
    universe = sorted(set().union(*edges)) if edges else []
    out = set()
    for r in range(len(universe) + 1):
        for combo in itertools.combinations(universe, r):
            t = frozenset(combo)
            if not all(t & e for e in edges):
                continue
            if all(not all((t - {v}) & e for e in edges) for v in t):
                out.add(t)
    return out


def _brute_minimal_sets(sets) -> set[frozenset]:
    pool = set(sets)
    return {s for s in pool if not any(t < s for t in pool)}


def brute_has_matching_minor(edge_sets, k: int) -> bool:
    """Exhaustive search over every keep/delete/contract assignment."""
    edges = [frozenset(e) for e in edge_sets]
    universe = sorted(set().union(*edges)) if edges else []
    for assign in itertools.product(range(3), repeat=len(universe)):
        dele = {v for v, a in zip(universe, assign) if a == 1}
        cont = {v for v, a in zip(universe, assign) if a == 2}
        cur = [e - cont for e in edges if not e & dele]
        mins = _brute_minimal_sets(cur)
        if (
            len(mins) == k
            and all(len(s) == 2 for s in mins)
            and len(frozenset().union(*mins) if mins else frozenset()) == 2 * k
        ):
            return True
    return False


def brute_minor_contains(edge_sets, recognizer) -> bool:
    """Exhaustive minor search with an arbitrary shape recognizer."""
    edges = [frozenset(e) for e in edge_sets]
    universe = sorted(set().union(*edges)) if edges else []
    for assign in itertools.product(range(3), repeat=len(universe)):
        dele = {v for v, a in zip(universe, assign) if a == 1}
        cont = {v for v, a in zip(universe, assign) if a == 2}
        cur = [e - cont for e in edges if not e & dele]
        if recognizer(_brute_minimal_sets(cur)):
            return True
    return False


def brute_min_cover_cost(inst, objective="cardinality"):
    """Minimum cover cost over every subfamily; None when infeasible."""
    universe = set(range(1, inst.universe_size + 1))
    best = None
    for r in range(len(inst.sets) + 1):
        for combo in itertools.combinations(range(len(inst.sets)), r):
            covered = set()
            for i in combo:
                covered |= inst.sets[i]
            if covered >= universe:
                if objective == "cardinality":
                    cost = len(combo)
                else:
                    cost = sum((inst.weights[i] for i in combo), Fraction(0))
                if best is None or cost < best:
                    best = cost
    return best


def truth_table_satisfiable(formula) -> bool:
    for bits in itertools.product((False, True), repeat=formula.num_vars):
        values = {i + 1: bits[i] for i in range(formula.num_vars)}
        if all(any(values[abs(l)] == (l > 0) for l in clause) for clause in formula.clauses):
            return True
    return False


def random_cnf(rng: random.Random, max_vars=12, max_clauses=20, width=3):
    from clutterkit import CnfFormula

    n = rng.randint(width, max_vars)
    m = rng.randint(1, max_clauses)
    clauses = []
    for _ in range(m):
        variables = rng.sample(range(1, n + 1), width)
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in variables))
    return CnfFormula(n, tuple(clauses))


def random_cover_instance(rng: random.Random, max_elements=12, max_sets=10,
                          max_weight=9):
    from clutterkit import SetCoverInstance

    n = rng.randint(1, max_elements)
    m = rng.randint(1, max_sets)
    sets = [set(rng.sample(range(1, n + 1), rng.randint(1, n))) for _ in range(m)]
    # patch any uncovered element into a random set so the instance is feasible
    covered = set().union(*sets)
    for u in range(1, n + 1):
        if u not in covered:
            sets[rng.randrange(m)].add(u)
    weights = tuple(Fraction(rng.randint(1, max_weight)) for _ in range(m))
    return SetCoverInstance(n, tuple(frozenset(s) for s in sets), weights)
