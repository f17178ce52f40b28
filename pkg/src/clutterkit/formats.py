"""Text formats: .clt clutters, semi-matchings, DIMACS CNF, cover instances."""
from __future__ import annotations

import warnings
from fractions import Fraction

from .core import Clutter, ONE
from .errors import ParseError
from .matching import SemiMatching
from .reductions import CnfFormula, SetCoverInstance


def parse_clutter(text: str) -> Clutter:
    """Parse the .clt format.

    One edge per line as whitespace-separated non-negative integers; '#'
    starts a comment; blank lines are skipped.  An empty document is the
    edgeless clutter; a document whose only content is the directive
    '!one' is the clutter with the single empty edge.  Input is
    minimalized on load, with a warning when that removes anything.
    """
    edges: list[list[int]] = []
    one_line: int | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "!one":
            one_line = lineno
            continue
        edge: list[int] = []
        for tok in line.split():
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(f"expected a non-negative integer, got {tok!r}", lineno)
            if v < 0:
                raise ParseError(f"vertex labels must be non-negative, got {v}", lineno)
            if v in edge:
                raise ParseError(f"duplicate vertex {v} in edge", lineno)
            edge.append(v)
        edges.append(edge)
    if one_line is not None:
        if edges:
            raise ParseError("'!one' cannot co-occur with edge lines", one_line)
        return ONE
    h = Clutter(edges)
    if len(h) < len(edges):
        warnings.warn(
            f"{len(edges) - len(h)} subsumed or duplicate edge(s) removed on load"
        )
    return h


def serialize_clutter(h: Clutter) -> str:
    """Canonical .clt text; inverse of parse_clutter."""
    if h.is_one:
        return "!one\n"
    return "".join(" ".join(map(str, e)) + "\n" for e in h.edges)


def format_semi_matching(matching: SemiMatching) -> str:
    """One-line form: pairs 'l1,l2:s1,s2,...' joined by ' ; ', '-' if empty."""
    if not matching.pairs:
        return "-"
    return " ; ".join(
        ",".join(map(str, l)) + ":" + ",".join(map(str, s)) for l, s in matching.pairs
    )


def parse_semi_matching(text: str) -> SemiMatching:
    """Parse the one-line semi-matching form ('#' comments allowed)."""
    payload = None
    payload_line = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if payload is not None:
            raise ParseError("a matching document holds a single line", lineno)
        payload, payload_line = line, lineno
    if payload is None or payload == "-":
        return SemiMatching()
    pairs = []
    for chunk in payload.split(";"):
        part = chunk.strip()
        if ":" not in part:
            raise ParseError(f"pair {part!r} is missing ':'", payload_line)
        left, right = part.split(":", 1)
        try:
            l = [int(t) for t in left.split(",") if t.strip() != ""]
            s = [int(t) for t in right.split(",") if t.strip() != ""]
        except ValueError:
            raise ParseError(f"pair {part!r} has a non-integer vertex", payload_line)
        pairs.append((l, s))
    try:
        return SemiMatching(pairs)
    except ValueError as exc:
        raise ParseError(str(exc), payload_line)


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF: 'c' comments, a 'p cnf <vars> <clauses>' header,
    then 0-terminated clauses (possibly spanning lines)."""
    num_vars: int | None = None
    clauses: list[tuple[int, ...]] = []
    lits: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("header must read 'p cnf <vars> <clauses>'", lineno)
            try:
                num_vars = int(parts[2])
                int(parts[3])
            except ValueError:
                raise ParseError("header counts must be integers", lineno)
            continue
        if num_vars is None:
            raise ParseError("clause before the 'p cnf' header", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"expected an integer literal, got {tok!r}", lineno)
            if lit == 0:
                if not lits:
                    raise ParseError("empty clause", lineno)
                clauses.append(tuple(lits))
                lits = []
            else:
                lits.append(lit)
    if num_vars is None:
        raise ParseError("missing 'p cnf' header", 1)
    if lits:
        clauses.append(tuple(lits))
    return CnfFormula(num_vars, tuple(clauses))


def parse_setcover(text: str) -> SetCoverInstance:
    """Parse the cover format: first line 'n m', then m lines of
    '<weight> <size> <e1> ... <esize>' with 1-based elements."""
    lines = [
        (lineno, raw.split("#", 1)[0].strip())
        for lineno, raw in enumerate(text.splitlines(), 1)
    ]
    lines = [(lineno, line) for lineno, line in lines if line]
    if not lines:
        raise ParseError("empty cover instance", 1)
    head_no, head = lines[0]
    parts = head.split()
    if len(parts) != 2:
        raise ParseError("first line must read '<universe size> <set count>'", head_no)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError("first line must hold two integers", head_no)
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} set lines, found {len(lines) - 1}", head_no)
    sets: list[frozenset[int]] = []
    weights: list[Fraction] = []
    for lineno, line in lines[1:]:
        toks = line.split()
        if len(toks) < 2:
            raise ParseError("set line must read '<weight> <size> <elements...>'", lineno)
        try:
            w = Fraction(toks[0])
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"weight {toks[0]!r} is not a rational", lineno)
        try:
            size = int(toks[1])
            elems = [int(t) for t in toks[2:]]
        except ValueError:
            raise ParseError("set size and elements must be integers", lineno)
        if len(elems) != size:
            raise ParseError(f"declared {size} elements, found {len(elems)}", lineno)
        sets.append(frozenset(elems))
        weights.append(w)
    try:
        return SetCoverInstance(n, tuple(sets), tuple(weights))
    except ValueError as exc:
        raise ParseError(str(exc), head_no)
