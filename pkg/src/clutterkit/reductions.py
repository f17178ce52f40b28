"""Set Cover and SAT solved by reading answers off the blocker.

A covering instance maps to a clutter by transposing incidence: one edge
per universe element, listing the sets that cover it.  Minimal covers are
then exactly the blocker sets, so any monotone objective is minimized by
scanning them.  A CNF formula maps to a clutter with one vertex per
literal and one edge per clause; the formula is satisfiable exactly when
some blocker set avoids every complementary literal pair.
"""
from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .blocker import DEFAULT_EDGE_BUDGET, blocker
from .core import Clutter
from .errors import InfeasibleInstanceError


@dataclass(frozen=True)
class SetCoverInstance:
    """Universe {1..n} plus a family of subsets, optionally weighted/named."""

    universe_size: int
    sets: tuple[frozenset[int], ...]
    weights: tuple[Fraction, ...] | None = None
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.universe_size < 0:
            raise ValueError("universe size must be non-negative")
        object.__setattr__(self, "sets", tuple(frozenset(s) for s in self.sets))
        for s in self.sets:
            for u in s:
                if not isinstance(u, int) or not 1 <= u <= self.universe_size:
                    raise ValueError(f"element {u!r} outside universe 1..{self.universe_size}")
        if self.weights is not None:
            ws = tuple(Fraction(w) for w in self.weights)
            if len(ws) != len(self.sets):
                raise ValueError("one weight per set is required")
            if any(w < 0 for w in ws):
                raise ValueError("weights must be non-negative")
            object.__setattr__(self, "weights", ws)
        if self.names is not None:
            names = tuple(str(n) for n in self.names)
            if len(names) != len(self.sets):
                raise ValueError("one name per set is required")
            object.__setattr__(self, "names", names)

    def name_of(self, i: int):
        return self.names[i] if self.names is not None else i


@dataclass(frozen=True)
class MonotoneOracle:
    """Caller-supplied cost on families of set names; assumed monotone.

    Monotonicity cannot be certified efficiently, so spot_check samples a
    few pairs and warns (never fails) on a violation.
    """

    evaluate: Callable[[frozenset], object]

    def __call__(self, names: frozenset):
        return self.evaluate(names)

    def spot_check(self, samples: Sequence[frozenset], rng: random.Random, rounds: int = 5):
        pool = list(samples)
        if len(pool) < 2:
            return
        for _ in range(rounds):
            a, b = rng.sample(pool, 2)
            if self(a) > self(a | b):
                warnings.warn("oracle violated monotonicity on a sampled pair")
                return


@dataclass
class CnfFormula:
    """CNF with DIMACS literal conventions (positive/negative var indices)."""

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.num_vars < 0:
            raise ValueError("variable count must be non-negative")
        self.clauses = tuple(tuple(c) for c in self.clauses)
        for clause in self.clauses:
            if not clause:
                raise ValueError("clauses must be non-empty")
            for lit in clause:
                if not isinstance(lit, int) or lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit!r} outside variables 1..{self.num_vars}")


@dataclass
class Assignment:
    """Total truth assignment on variables 1..n."""

    values: dict[int, bool]

    def __getitem__(self, var: int) -> bool:
        return self.values[var]

    def as_literals(self) -> tuple[int, ...]:
        return tuple(v if self.values[v] else -v for v in sorted(self.values))


def satisfies(formula: CnfFormula, assignment: Assignment) -> bool:
    for clause in formula.clauses:
        if not any(
            assignment.values[abs(lit)] == (lit > 0) for lit in clause
        ):
            return False
    return True


def setcover_to_clutter(inst: SetCoverInstance) -> Clutter:
    """Incidence transpose: one edge per element over set-index vertices.

    Raises InfeasibleInstanceError when some element is uncovered (an
    empty edge would conflate infeasibility with the ONE clutter).
    """
    rows = []
    for u in range(1, inst.universe_size + 1):
        row = [i for i, s in enumerate(inst.sets) if u in s]
        if not row:
            raise InfeasibleInstanceError(f"element {u} is not covered by any set")
        rows.append(row)
    return Clutter(rows)


def solve_setcover(
    inst: SetCoverInstance,
    objective: str = "cardinality",
    *,
    oracle: MonotoneOracle | Callable[[frozenset], object] | None = None,
    edge_budget: int = DEFAULT_EDGE_BUDGET,
):
    """Minimum cover under a monotone objective, by blocker scan.

    objective is one of "cardinality", "weighted" (requires instance
    weights) or "oracle" (requires an oracle over name sets).  Because
    every objective here is monotone, the optimum over all covers is
    attained at a minimal cover, i.e. at a blocker set.  Returns
    (sorted tuple of set names, cost); ties go to the canonically first
    blocker set.
    """
    if objective not in ("cardinality", "weighted", "oracle"):
        raise ValueError(f"unknown objective {objective!r}")
    if objective == "weighted" and inst.weights is None:
        raise ValueError("weighted objective requires instance weights")
    if objective == "oracle":
        if oracle is None:
            raise ValueError("oracle objective requires an oracle")
        if not isinstance(oracle, MonotoneOracle):
            oracle = MonotoneOracle(oracle)

    covers = blocker(setcover_to_clutter(inst), edge_budget=edge_budget)
    if objective == "oracle":
        name_sets = [frozenset(inst.name_of(i) for i in t) for t in covers]
        oracle.spot_check(name_sets, random.Random(0))

    best: tuple[int, ...] | None = None
    best_cost = None
    for t in covers:
        if objective == "cardinality":
            cost = len(t)
        elif objective == "weighted":
            cost = sum((inst.weights[i] for i in t), Fraction(0))
        else:
            cost = oracle(frozenset(inst.name_of(i) for i in t))
        if best_cost is None or cost < best_cost:
            best, best_cost = t, cost
    if best is None:
        raise InfeasibleInstanceError("instance has no cover")
    return tuple(sorted(inst.name_of(i) for i in best)), best_cost


def _literal_vertex(lit: int) -> int:
    return 2 * lit if lit > 0 else 2 * (-lit) + 1


def cnf_to_clutter(formula: CnfFormula) -> Clutter:
    """One edge per clause over literal vertices (2i for x_i, 2i+1 for
    its negation).  Subsumed clauses vanish, which is sound for
    satisfiability since a subset clause is logically stronger."""
    return Clutter(
        [_literal_vertex(lit) for lit in clause] for clause in formula.clauses
    )


def solve_sat(
    formula: CnfFormula, *, edge_budget: int = DEFAULT_EDGE_BUDGET
) -> Assignment | None:
    """A satisfying assignment read from the blocker, or None if there is
    no consistent blocker set.

    A blocker set touching no complementary pair extends to a full
    assignment; variables it leaves unconstrained default to false.  The
    returned assignment is re-checked against the formula before return.
    """
    transversals = blocker(cnf_to_clutter(formula), edge_budget=edge_budget)
    for t in transversals:
        ts = set(t)
        if any(2 * i in ts and 2 * i + 1 in ts for i in range(1, formula.num_vars + 1)):
            continue
        assignment = Assignment({i: (2 * i in ts) for i in range(1, formula.num_vars + 1)})
        if not satisfies(formula, assignment):
            raise RuntimeError("internal error: blocker scan produced a falsifying assignment")
        return assignment
    return None
