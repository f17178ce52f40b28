"""Semi-matchings, expanded minor matchings, and pair-matching minors.

A semi-matching of a clutter is a list of pairs (L, S) where every L is a
two-vertex set inside its host edge S.  Writing L_i, S_i for the pairs,
the conditions are:

  1.  |L_i| = 2, L_i is a subset of S_i, and S_i is an edge of the clutter;
  2.  the L_i are pairwise disjoint;
  3a. L_i is not a subset of S_j for i != j;
  3b. L_i does not meet S_j for i != j;
  4.  every edge contained in the union of the S_i has some L_i as a subset.

Pairs satisfying 1, 2, 3a and 4 form a semi-matching; adding 3b makes an
expanded minor matching, which certifies that the L_i survive as a
pairwise-disjoint matching after deleting everything outside the union
of the S_i and contracting the rest of that union down to the L_i.

Condition 4 can be restated through the expansion operator: the pairs
satisfy it exactly when expanding the clutter along the L_i over the
union of the S_i does not collapse to ONE.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .core import Clutter, Edge, ZERO
from .errors import ResourceLimitError

DEFAULT_CHOICE_BUDGET = 2**20
DEFAULT_ENUM_BUDGET = 10**6
DEFAULT_NODE_BUDGET = 10**6

Pair = tuple[Edge, Edge]


class SemiMatching:
    """Ordered pairs (L, S), canonically sorted by the smallest vertex of L.

    Structural invariants (each L has two vertices inside its S; the L are
    pairwise disjoint) are enforced on construction.  Validity against a
    host clutter is checked by is_semi_matching, not stored.
    """

    __slots__ = ("pairs",)

    pairs: tuple[Pair, ...]

    def __init__(self, pairs: Iterable[Iterable[Iterable[int]]] = ()):
        canon: list[Pair] = []
        for pair in pairs:
            left, host = pair
            l = tuple(sorted(set(left)))
            s = tuple(sorted(set(host)))
            if len(l) != 2:
                raise ValueError(f"pair set must have exactly two vertices, got {l}")
            if not set(l) <= set(s):
                raise ValueError(f"pair set {l} must lie inside its host set {s}")
            canon.append((l, s))
        canon.sort(key=lambda p: (p[0][0], p[0], p[1]))
        used: set[int] = set()
        for l, _ in canon:
            if used & set(l):
                raise ValueError("pair sets must be pairwise disjoint")
            used.update(l)
        self.pairs = tuple(canon)

    @property
    def blocks(self) -> tuple[Edge, ...]:
        """The two-vertex sets, in pair order."""
        return tuple(l for l, _ in self.pairs)

    @property
    def hosts(self) -> tuple[Edge, ...]:
        """The host edges, in pair order."""
        return tuple(s for _, s in self.pairs)

    @property
    def support(self) -> Edge:
        """Sorted union of the host edges."""
        out: set[int] = set()
        for _, s in self.pairs:
            out.update(s)
        return tuple(sorted(out))

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SemiMatching):
            return NotImplemented
        return self.pairs == other.pairs

    def __hash__(self) -> int:
        return hash(self.pairs)

    def __repr__(self) -> str:
        return f"SemiMatching({[(list(l), list(s)) for l, s in self.pairs]})"


@dataclass(frozen=True)
class ConflictGraph:
    """Conflicts between matching pairs: i ~ j when one host meets the
    other pair's two-vertex set in exactly one vertex."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def neighbor_map(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {i: set() for i in range(self.n)}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj


@dataclass(frozen=True)
class MinorWitness:
    """A (delete, contract) certificate that the named pairs survive as a
    matching minor."""

    delete: Edge
    contract: Edge
    matching: tuple[Edge, ...]

    def verify(self, h: Clutter) -> bool:
        if set(self.delete) & set(self.contract):
            return False
        minor = h.restrict(self.delete, self.contract)
        return minor == Clutter(self.matching) and is_k_matching(minor, len(self.matching))


def expansion(
    h: Clutter,
    blocks: Iterable[Iterable[int]],
    carrier: Iterable[int],
    *,
    choice_budget: int = DEFAULT_CHOICE_BUDGET,
) -> Clutter:
    """Join, over every way of choosing one vertex from each block, of the
    minor that deletes the chosen image and contracts the rest of the
    carrier.

    Blocks must be pairwise disjoint subsets of the carrier.  The number
    of choice functions is the product of the block sizes; beyond
    choice_budget a ResourceLimitError is raised.
    """
    blks = [tuple(sorted(set(b))) for b in blocks]
    carrier_set = frozenset(carrier)
    seen: set[int] = set()
    for b in blks:
        bs = set(b)
        if seen & bs:
            raise ValueError("expansion blocks must be pairwise disjoint")
        if not bs <= carrier_set:
            raise ValueError("expansion blocks must lie inside the carrier")
        seen |= bs
    count = math.prod(len(b) for b in blks)
    if count > choice_budget:
        raise ResourceLimitError(
            f"expansion would iterate {count} choice functions (budget {choice_budget})"
        )
    out = ZERO
    for choice in itertools.product(*blks):
        image = frozenset(choice)
        out = out.join(h.restrict(image, carrier_set - image))
    return out


def is_semi_matching(h: Clutter, matching: SemiMatching) -> bool:
    """Check conditions 1, 2, 3a and 4 against h (2 holds structurally)."""
    prs = matching.pairs
    edge_index = set(h.edge_sets)
    lsets = [frozenset(l) for l, _ in prs]
    ssets = [frozenset(s) for _, s in prs]
    for s in ssets:
        if s not in edge_index:
            return False
    for i, l in enumerate(lsets):
        for j, s in enumerate(ssets):
            if i != j and l <= s:
                return False
    support = frozenset().union(*ssets) if prs else frozenset()
    for e in h.edge_sets:
        if e <= support and not any(l <= e for l in lsets):
            return False
    return True


def is_expanded_minor_matching(h: Clutter, matching: SemiMatching) -> bool:
    """A semi-matching whose two-vertex sets avoid all other hosts (3b)."""
    if not is_semi_matching(h, matching):
        return False
    prs = matching.pairs
    for i, (l, _) in enumerate(prs):
        ls = set(l)
        for j, (_, s) in enumerate(prs):
            if i != j and ls & set(s):
                return False
    return True


def enumerate_semi_matchings(
    h: Clutter, *, budget: int = DEFAULT_ENUM_BUDGET
) -> list[SemiMatching]:
    """Every semi-matching of h, in size-then-lex order.

    The empty matching is included whenever it qualifies (always, except
    when h has the empty edge).  Search is exponential; after visiting
    `budget` candidate pair sets a ResourceLimitError is raised.
    """
    cand = sorted({(tuple(sorted(l)), e) for e in h.edges for l in itertools.combinations(e, 2)})
    cl = [frozenset(l) for l, _ in cand]
    cs = [frozenset(s) for _, s in cand]
    edge_sets = h.edge_sets
    found: list[list[int]] = []
    visited = 0

    def condition4(chosen: list[int]) -> bool:
        support = frozenset().union(*(cs[i] for i in chosen)) if chosen else frozenset()
        for e in edge_sets:
            if e <= support and not any(cl[i] <= e for i in chosen):
                return False
        return True

    def rec(start: int, chosen: list[int]) -> None:
        nonlocal visited
        visited += 1
        if visited > budget:
            raise ResourceLimitError(
                f"semi-matching enumeration exceeded budget of {budget} candidates"
            )
        if condition4(chosen):
            found.append(chosen.copy())
        for i in range(start, len(cand)):
            li, si = cl[i], cs[i]
            ok = True
            for j in chosen:
                if cl[j] & li or cl[j] <= si or li <= cs[j]:
                    ok = False
                    break
            if ok:
                chosen.append(i)
                rec(i + 1, chosen)
                chosen.pop()

    rec(0, [])
    out = [SemiMatching([cand[i] for i in idxs]) for idxs in found]
    out.sort(key=lambda m: (len(m.pairs), m.pairs))
    return out


def extend_semi_matching(
    matching: SemiMatching,
    h: Clutter,
    pair: Iterable[int],
    carrier: Iterable[int],
) -> SemiMatching:
    """Lift a semi-matching of expansion(h, [pair], carrier) back to h and
    append (pair, carrier).

    Every lifted host is the canonically first edge E of h with
    old_host <= E <= old_host | carrier and pair not inside E; this makes
    the lift deterministic and injective for a fixed (pair, carrier).
    """
    r = tuple(sorted(set(pair)))
    c = frozenset(carrier)
    if len(r) != 2:
        raise ValueError("the appended pair must have exactly two vertices")
    if not set(r) <= c:
        raise ValueError("the appended pair must lie inside the carrier")
    if c not in set(h.edge_sets):
        raise ValueError("the carrier must be an edge of the host clutter")
    expanded = expansion(h, [r], c)
    if not is_semi_matching(expanded, matching):
        raise ValueError("input is not a semi-matching of the expanded clutter")
    rs = set(r)
    new_pairs: list[tuple[Edge, Edge]] = []
    for l, s in matching.pairs:
        ss = frozenset(s)
        host = next(
            (e for e, es in zip(h.edges, h.edge_sets)
             if ss <= es <= (ss | c) and not rs <= es),
            None,
        )
        if host is None:
            raise ValueError(f"no eligible host edge for pair {l}; matching does not lift")
        new_pairs.append((l, host))
    new_pairs.append((r, tuple(sorted(c))))
    return SemiMatching(new_pairs)


def build_conflict_graph(matching: SemiMatching) -> ConflictGraph:
    """Graph on pair indices; assumes the matching satisfies 1, 2 and 3a.

    For hosts of size at most r the graph has at most (r-2) * n edges,
    since each host has at most r-2 vertices outside its own pair and the
    two-vertex sets are disjoint.
    """
    prs = matching.pairs
    lsets = [frozenset(l) for l, _ in prs]
    ssets = [frozenset(s) for _, s in prs]
    edges = []
    for i in range(len(prs)):
        for j in range(i + 1, len(prs)):
            if len(ssets[i] & lsets[j]) == 1 or len(ssets[j] & lsets[i]) == 1:
                edges.append((i, j))
    return ConflictGraph(len(prs), tuple(edges))


def greedy_independent_set(graph: ConflictGraph) -> tuple[int, ...]:
    """Min-degree greedy independent set.

    Repeatedly takes a surviving vertex of minimum remaining degree
    (smallest index on ties) and discards its neighbors, which yields at
    least ceil(n^2 / (2m + n)) vertices.
    """
    adj = graph.neighbor_map()
    alive = set(range(graph.n))
    chosen: list[int] = []
    while alive:
        v = min(alive, key=lambda u: (len(adj[u] & alive), u))
        chosen.append(v)
        alive.discard(v)
        alive -= adj[v]
    return tuple(sorted(chosen))


def extract_minor_matching(h: Clutter, matching: SemiMatching) -> SemiMatching:
    """Constructively thin a semi-matching down to an expanded minor
    matching of size at least ceil(n * 2^-(r-2) / (2r-3)), where n is the
    input size and r the rank of h.

    The construction takes a greedy independent set of the conflict graph
    and then picks one vertex from each leftover pair by maximizing, with
    exact rational arithmetic, the expected number of independent pairs
    whose hosts avoid every picked vertex (ties broken toward the smaller
    vertex).  Surviving pairs keep their original hosts.  When the rank is
    two the conflict graph is edgeless and the input survives whole.
    """
    if not is_semi_matching(h, matching):
        raise ValueError("input is not a semi-matching of the given clutter")
    prs = matching.pairs
    if not prs:
        return matching
    stable = list(greedy_independent_set(build_conflict_graph(matching)))
    outside = [j for j in range(len(prs)) if j not in set(stable)]
    s_of = {i: frozenset(prs[i][1]) for i in stable}
    if not outside:
        return SemiMatching(prs)
    l_of = {j: prs[j][0] for j in outside}

    def expected(fixed: dict[int, int]) -> Fraction:
        total = Fraction(0)
        for i in stable:
            si = s_of[i]
            p = Fraction(1)
            for j in outside:
                v = fixed.get(j)
                if v is not None:
                    if v in si:
                        p = Fraction(0)
                        break
                else:
                    p *= Fraction(len(set(l_of[j]) - si), 2)
            total += p
        return total

    fixed: dict[int, int] = {}
    for j in outside:
        lo, hi = l_of[j]
        fixed[j] = lo if expected(fixed | {j: lo}) >= expected(fixed | {j: hi}) else hi
    picked = set(fixed.values())
    keep = [i for i in stable if not (picked & s_of[i])]
    return SemiMatching(prs[i] for i in keep)


def matching_to_minor(h: Clutter, matching: SemiMatching) -> MinorWitness:
    """Turn an expanded minor matching into a concrete minor witness.

    Deletes everything outside the union of the hosts and contracts the
    hosts down to the two-vertex sets; the resulting minor is exactly the
    clutter of those sets.
    """
    if not is_expanded_minor_matching(h, matching):
        raise ValueError("input is not an expanded minor matching of the given clutter")
    union_l: set[int] = set()
    union_s: set[int] = set()
    for l, s in matching.pairs:
        union_l.update(l)
        union_s.update(s)
    delete = tuple(sorted(set(h.vertices) - union_s))
    contract = tuple(sorted(union_s - union_l))
    return MinorWitness(delete, contract, matching.blocks)


def is_k_matching(h: Clutter, k: int) -> bool:
    """True iff h has exactly k edges, all of size two, pairwise disjoint."""
    if k < 0 or len(h.edges) != k:
        return False
    if any(len(e) != 2 for e in h.edges):
        return False
    return len(h.vertices) == 2 * k


def find_kk2_minor(
    h: Clutter, k: int, *, node_budget: int = DEFAULT_NODE_BUDGET
) -> MinorWitness | None:
    """Exact search for a k-edge matching minor; a witness or None.

    Candidate matchings are assembled from two-vertex subsets of edges
    (every matching edge of a minor is the trace of a host edge), and
    candidate contraction sets from unions of host edges covering the
    chosen pairs.  Whenever a matching minor exists, a witness of this
    restricted shape exists, so the search is exhaustive.  Each candidate
    costs one restriction check; past node_budget checks a
    ResourceLimitError is raised.
    """
    if k < 0:
        raise ValueError("matching size must be non-negative")
    if k == 0:
        return None if h.is_one else MinorWitness(h.vertices, (), ())
    if h.is_zero or h.is_one:
        return None
    pair_hosts: dict[Edge, list[frozenset]] = {}
    for e, es in zip(h.edges, h.edge_sets):
        for l in itertools.combinations(e, 2):
            pair_hosts.setdefault(l, []).append(es)
    pairs = sorted(pair_hosts)
    verts = frozenset(h.vertices)
    checks = 0

    def check_candidate(chosen: tuple[Edge, ...]) -> MinorWitness | None:
        nonlocal checks
        a = frozenset(v for p in chosen for v in p)
        target = Clutter(chosen)
        seen: set[frozenset] = set()
        for hosts in itertools.product(*(pair_hosts[p] for p in chosen)):
            b = frozenset().union(*hosts) - a
            if b in seen:
                continue
            seen.add(b)
            checks += 1
            if checks > node_budget:
                raise ResourceLimitError(
                    f"matching-minor search exceeded node budget of {node_budget}"
                )
            if h.restrict(verts - a - b, b) == target:
                return MinorWitness(tuple(sorted(verts - a - b)), tuple(sorted(b)), chosen)
        return None

    def rec(start: int, chosen: list[Edge], used: frozenset) -> MinorWitness | None:
        if len(chosen) == k:
            return check_candidate(tuple(chosen))
        for i in range(start, len(pairs)):
            if len(pairs) - i < k - len(chosen):
                break
            p = pairs[i]
            if used & frozenset(p):
                continue
            chosen.append(p)
            got = rec(i + 1, chosen, used | frozenset(p))
            chosen.pop()
            if got is not None:
                return got
        return None

    return rec(0, [], frozenset())
