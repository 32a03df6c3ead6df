"""Matchings over rational edge weights: enumeration and optimisation.

Matchings are frozensets of edge ids.  Weight vectors are tuples of
nonnegative Fractions indexed by edge id, with at least one positive
entry.  Every operation is deterministic: enumeration streams are
sorted lexicographically by their sorted edge-id tuples, and argmax
selections take the lexicographically first optimum.

Small graphs are optimised by exhaustive enumeration, larger ones by
the blossom method; the two routes must agree wherever both run, and
the test suite holds them to that.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Sequence

from .blossom import max_weight_matching_pairs
from .errors import (
    BadWeights,
    BudgetExceeded,
    IncludeNotMatching,
    NoPerfectMatching,
    ParseError,
)
from .graphs import Graph, delete

# Enumeration refuses larger graphs unless the caller raises the limits.
PERFECT_VERTEX_LIMIT = 26
MAXIMAL_VERTEX_LIMIT = 20
PERFECT_COUNT_BUDGET = 10**5
MAXIMAL_COUNT_BUDGET = 10**6

Matching = frozenset

WeightVector = tuple


def validate_weights(g: Graph, weights: Sequence) -> tuple[Fraction, ...]:
    """Coerce to Fractions and enforce the weight-function contract."""
    if len(weights) != g.m:
        raise BadWeights(f"expected {g.m} weights, got {len(weights)}")
    out = tuple(Fraction(w) for w in weights)
    if any(w < 0 for w in out):
        raise BadWeights("weights must be nonnegative")
    if g.m and all(w == 0 for w in out):
        raise BadWeights("at least one weight must be positive")
    return out


def uniform_weights(g: Graph) -> tuple[Fraction, ...]:
    return tuple(Fraction(1) for _ in range(g.m))


def matching_weight(weights: Sequence, m: Iterable[int]) -> Fraction:
    return sum((Fraction(weights[e]) for e in m), Fraction(0))


def is_matching(g: Graph, edge_ids: Iterable[int]) -> bool:
    used: set[int] = set()
    for e in edge_ids:
        if not 0 <= e < g.m:
            return False
        u, v = g.endpoints(e)
        if u in used or v in used:
            return False
        used.update((u, v))
    return True


def saturated(g: Graph, m: Iterable[int]) -> frozenset[int]:
    out: set[int] = set()
    for e in m:
        out.update(g.endpoints(e))
    return frozenset(out)


def unsaturated(g: Graph, m: Iterable[int]) -> tuple[int, ...]:
    sat = saturated(g, m)
    return tuple(v for v in range(g.n) if v not in sat)


def is_maximal_matching(g: Graph, m: frozenset[int]) -> bool:
    if not is_matching(g, m):
        return False
    sat = saturated(g, m)
    return all(u in sat or v in sat for u, v in g.edges)


def _sorted_stream(found: list[frozenset[int]]) -> tuple[frozenset[int], ...]:
    return tuple(sorted(found, key=lambda s: tuple(sorted(s))))


def enumerate_perfect_matchings(
    g: Graph,
    *,
    vertex_limit: int = PERFECT_VERTEX_LIMIT,
    count_budget: int = PERFECT_COUNT_BUDGET,
) -> tuple[frozenset[int], ...]:
    """All perfect matchings, lexicographically sorted.

    Branches on the lowest unsaturated vertex, so each matching is
    produced exactly once.  Raises BudgetExceeded if the graph is over
    vertex_limit or more than count_budget matchings exist.
    """
    if g.n > vertex_limit:
        raise BudgetExceeded(
            f"{g.n} vertices exceeds the enumeration limit {vertex_limit}"
        )
    if g.n % 2:
        return ()
    found: list[frozenset[int]] = []
    sat = [False] * g.n
    chosen: list[int] = []

    def extend() -> None:
        v = next((u for u in range(g.n) if not sat[u]), None)
        if v is None:
            if len(found) >= count_budget:
                raise BudgetExceeded(f"more than {count_budget} perfect matchings")
            found.append(frozenset(chosen))
            return
        sat[v] = True
        for u, eid in g.adj[v]:
            if sat[u]:
                continue
            sat[u] = True
            chosen.append(eid)
            extend()
            chosen.pop()
            sat[u] = False
        sat[v] = False

    extend()
    return _sorted_stream(found)


def enumerate_maximal_matchings(
    g: Graph,
    *,
    vertex_limit: int = MAXIMAL_VERTEX_LIMIT,
    count_budget: int = MAXIMAL_COUNT_BUDGET,
) -> tuple[frozenset[int], ...]:
    """All maximal matchings, lexicographically sorted.

    Each vertex is either matched or committed to stay exposed; an
    exposed vertex may never see an exposed neighbour, which is exactly
    maximality.  Budgets as in enumerate_perfect_matchings.
    """
    if g.n > vertex_limit:
        raise BudgetExceeded(
            f"{g.n} vertices exceeds the enumeration limit {vertex_limit}"
        )
    UNDECIDED, MATCHED, EXPOSED = 0, 1, 2
    state = [UNDECIDED] * g.n
    found: list[frozenset[int]] = []
    chosen: list[int] = []

    def extend() -> None:
        v = next((u for u in range(g.n) if state[u] == UNDECIDED), None)
        if v is None:
            if len(found) >= count_budget:
                raise BudgetExceeded(f"more than {count_budget} maximal matchings")
            found.append(frozenset(chosen))
            return
        state[v] = MATCHED
        for u, eid in g.adj[v]:
            if state[u] != UNDECIDED:
                continue
            state[u] = MATCHED
            chosen.append(eid)
            extend()
            chosen.pop()
            state[u] = UNDECIDED
        if all(state[u] != EXPOSED for u, _ in g.adj[v]):
            state[v] = EXPOSED
            extend()
        state[v] = UNDECIDED

    extend()
    return _sorted_stream(found)


def _blossom_argmax(g: Graph, weights: Sequence[Fraction]) -> frozenset[int]:
    pair_weight = {}
    for eid, (u, v) in enumerate(g.edges):
        pair_weight[(u, v)] = Fraction(weights[eid])
    adjacency = [[u for u, _ in g.adj[v]] for v in range(g.n)]
    pairs = max_weight_matching_pairs(g.n, pair_weight, adjacency)
    out = set()
    for u, v in pairs:
        eid = g.edge_id(u, v)
        assert eid is not None
        out.add(eid)
    return frozenset(out)


def _enum_argmax(
    stream: Iterable[frozenset[int]], weights: Sequence[Fraction]
) -> frozenset[int] | None:
    best: frozenset[int] | None = None
    best_w = None
    for m in stream:
        w = matching_weight(weights, m)
        if best_w is None or w > best_w:
            best, best_w = m, w
    return best


def blossom_max_matching(g: Graph, weights: Sequence) -> frozenset[int]:
    """Maximum-weight matching via the blossom engine, any graph size."""
    return _blossom_argmax(g, validate_weights(g, weights))


def max_weight_matching(g: Graph, weights: Sequence) -> frozenset[int]:
    """A matching of maximum total weight.

    Enumeration below the maximal-matching vertex limit, blossom above
    it.  With nonnegative weights some maximal matching is optimal, so
    the small route scans those.
    """
    w = validate_weights(g, weights)
    if g.n <= MAXIMAL_VERTEX_LIMIT:
        best = _enum_argmax(enumerate_maximal_matchings(g), w)
        return best if best is not None else frozenset()
    return _blossom_argmax(g, w)


def shift_perfect_matching(g: Graph, weights: Sequence) -> frozenset[int]:
    """Best perfect matching via the blossom engine and a weight shift.

    Every weight is shifted by 1 + sum(w): any larger matching then
    beats any smaller one, so the blossom optimum has maximum
    cardinality and, among perfect matchings, maximum original weight.
    Raises NoPerfectMatching when none exists.
    """
    w = validate_weights(g, weights)
    if g.n % 2:
        raise NoPerfectMatching("odd vertex count")
    shift = Fraction(1) + sum(w, Fraction(0))
    shifted = tuple(x + shift for x in w)
    m = _blossom_argmax(g, shifted)
    if len(m) * 2 != g.n:
        raise NoPerfectMatching("no perfect matching exists")
    return m


def max_weight_perfect_matching(g: Graph, weights: Sequence) -> frozenset[int]:
    """A perfect matching of maximum total weight.

    Enumeration below the perfect-matching vertex limit, the shifted
    blossom route above it.  Raises NoPerfectMatching when none exists.
    """
    w = validate_weights(g, weights)
    if g.n % 2:
        raise NoPerfectMatching("odd vertex count")
    if g.n <= PERFECT_VERTEX_LIMIT:
        best = _enum_argmax(enumerate_perfect_matchings(g), w)
        if best is None:
            raise NoPerfectMatching("no perfect matching exists")
        return best
    return shift_perfect_matching(g, w)


def has_perfect_matching(g: Graph) -> bool:
    """Polynomial check via maximum-cardinality matching."""
    if g.n % 2:
        return False
    if g.n == 0:
        return True
    if any(g.degree(v) == 0 for v in range(g.n)):
        return False
    m = _blossom_argmax(g, uniform_weights(g))
    return len(m) * 2 == g.n


def pm_with_forced_edges(
    g: Graph, include: Iterable[int], exclude: Iterable[int] = ()
) -> bool:
    """Does some perfect matching contain all of include and none of exclude?

    include must be a matching and disjoint from exclude.  Decided by
    deleting include's endpoints and the excluded edges, then testing
    the remainder for a perfect matching.
    """
    inc = frozenset(include)
    exc = frozenset(exclude)
    if not is_matching(g, inc):
        raise IncludeNotMatching("forced edges do not form a matching")
    if inc & exc:
        raise IncludeNotMatching("forced and excluded edges overlap")
    for e in exc:
        g.endpoints(e)  # id validation
    sub = delete(g, vertices=saturated(g, inc), edges=exc)
    return has_perfect_matching(sub.graph)


# ---------------------------------------------------------------------------
# weight I/O and random draws


def parse_weight_csv(text: str, m: int) -> tuple[Fraction, ...]:
    """Read "edge_id,value" lines; value is "num/den" or an integer.

    Every edge id 0..m-1 must appear exactly once.  Comment lines start
    with '#'.
    """
    values: dict[int, Fraction] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'edge_id,value'")
        try:
            eid = int(parts[0])
            val = Fraction(parts[1])
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
        if not 0 <= eid < m:
            raise ParseError(f"line {lineno}: edge id {eid} not in 0..{m - 1}")
        if eid in values:
            raise ParseError(f"line {lineno}: duplicate edge id {eid}")
        values[eid] = val
    missing = [e for e in range(m) if e not in values]
    if missing:
        raise ParseError(f"missing weights for edge ids {missing[:5]}")
    return tuple(values[e] for e in range(m))


def format_weight_csv(weights: Sequence[Fraction]) -> str:
    lines = [
        f"{eid},{w.numerator}/{w.denominator}"
        for eid, w in enumerate(Fraction(x) for x in weights)
    ]
    return "\n".join(lines) + "\n"


def random_weights(
    g: Graph,
    rng: random.Random,
    max_numerator: int = 12,
    max_denominator: int = 6,
) -> tuple[Fraction, ...]:
    """Small random rationals with at least one positive entry."""
    while True:
        w = tuple(
            Fraction(rng.randint(0, max_numerator), rng.randint(1, max_denominator))
            for _ in range(g.m)
        )
        if any(x > 0 for x in w):
            return w
