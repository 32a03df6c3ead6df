"""The matching ratio eta and its machine-checkable certificates.

For a weighting w (nonnegative rationals, not all zero) define the
ratio of the best perfect matching weight to the best matching weight.
eta(g) is the worst case over all weightings.  It lives in [0, 1]:
it is 0 exactly when some edge lies outside every perfect matching,
and 1 exactly when every maximal matching is perfect.

eta_exact computes the value by linear programming over the reciprocal:
for each maximal matching M, the largest weight M can carry while every
perfect matching stays at weight <= 1 is

    s(M) = max { w(M) : w(P) <= 1 for every perfect matching P, w >= 0 }

and 1/eta = max_M s(M).  An optimal w may be supported on M itself
(dropping other coordinates never hurts the objective and only relaxes
the constraints), which keeps each LP tiny.  The returned witness is
re-evaluated through the independent matching engines before the result
is accepted.

Certificates bound eta from one side and carry enough raw data for
verify() to recheck the claim from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .classify import is_bridgeless, is_independent
from .errors import (
    BadParameters,
    BudgetExceeded,
    IncludeNotMatching,
    NoPerfectMatching,
    ParseError,
)
from .graphs import CubicGraph, Graph, components, delete
from .lp import OPTIMAL, program, solve
from .matching import (
    MAXIMAL_COUNT_BUDGET,
    PERFECT_COUNT_BUDGET,
    enumerate_maximal_matchings,
    enumerate_perfect_matchings,
    has_perfect_matching,
    is_matching,
    matching_weight,
    max_weight_matching,
    max_weight_perfect_matching,
    pm_with_forced_edges,
    saturated,
    unsaturated,
    validate_weights,
)

CAP_UPPER = "cap_upper"
INDEPENDENT_SET_UPPER = "independent_set_upper"
BERGE_COVER_LOWER = "berge_cover_lower"
ODD_COMPONENT_UPPER = "odd_component_upper"


@dataclass(frozen=True)
class EtaResult:
    """eta value plus a witness weighting that attains it.

    argmax_matching is a best matching under the witness, and
    worst_pm_weight the best perfect matching weight; their quotient
    reproduces value exactly.
    """

    value: Fraction
    witness_weights: tuple[Fraction, ...]
    argmax_matching: tuple[int, ...]
    argmax_weight: Fraction
    worst_pm_weight: Fraction


@dataclass(frozen=True)
class BoundCertificate:
    """A one-sided bound on eta with its supporting structure.

    kind selects the payload:
      cap_upper: matching + cap, bound = cap / |matching|
      independent_set_upper: maximal matching + its exposed vertex set,
          bound = (n - 2|S|) / (n - |S|)
      berge_cover_lower: perfect matchings with multiplicities covering
          every edge cover_count times, 3 * cover_count in total;
          bound = 1/3 from below
      odd_component_upper: matching whose endpoint deletion leaves the
          listed components; cap and bound as in cap_upper
    """

    kind: str
    bound: Fraction
    matching: tuple[int, ...] | None = None
    independent_set: tuple[int, ...] | None = None
    cap: int | None = None
    families: tuple[tuple[tuple[int, ...], int], ...] | None = None
    cover_count: int | None = None
    component_list: tuple[tuple[int, ...], ...] | None = None


# ---------------------------------------------------------------------------
# the two degenerate cases


def is_eta_zero(g: Graph) -> tuple[bool, int | None]:
    """True with a witness edge that lies in no perfect matching.

    Scans edges in id order; each test deletes the edge's endpoints and
    asks for a perfect matching on the rest.
    """
    if not has_perfect_matching(g):
        raise NoPerfectMatching("eta needs a graph with a perfect matching")
    for eid in range(g.m):
        if not pm_with_forced_edges(g, (eid,)):
            return True, eid
    return False, None


def is_eta_one(
    g: Graph, *, node_budget: int = 10**7
) -> tuple[bool, frozenset[int] | None]:
    """True iff every maximal matching is perfect.

    Searches for a maximal matching that leaves a vertex exposed,
    trying exposure before matching so counterexamples surface early.
    Returns (False, witness) with such a matching, or (True, None).
    """
    if not has_perfect_matching(g):
        raise NoPerfectMatching("eta needs a graph with a perfect matching")
    UNDECIDED, MATCHED, EXPOSED = 0, 1, 2
    state = [UNDECIDED] * g.n
    chosen: list[int] = []
    nodes = 0

    def search() -> frozenset[int] | None:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded(f"eta-one search passed {node_budget} nodes")
        v = next((u for u in range(g.n) if state[u] == UNDECIDED), None)
        if v is None:
            if 2 * len(chosen) < g.n:
                return frozenset(chosen)
            return None
        if all(state[u] != EXPOSED for u, _ in g.adj[v]):
            state[v] = EXPOSED
            hit = search()
            if hit is not None:
                state[v] = UNDECIDED
                return hit
        state[v] = MATCHED
        for u, eid in g.adj[v]:
            if state[u] != UNDECIDED:
                continue
            state[u] = MATCHED
            chosen.append(eid)
            hit = search()
            chosen.pop()
            state[u] = UNDECIDED
            if hit is not None:
                state[v] = UNDECIDED
                return hit
        state[v] = UNDECIDED
        return None

    witness = search()
    if witness is None:
        return True, None
    return False, witness


# ---------------------------------------------------------------------------
# exact value


def _edge_masks(matchings: Sequence[frozenset[int]]) -> list[int]:
    return [sum(1 << e for e in m) for m in matchings]


def _greedy_cover_count(mask: int, pm_masks: Sequence[int]) -> int:
    """Perfect matchings needed to cover all bits of mask, greedily.

    Any such cover is a feasible dual for s(M), so its size bounds s(M)
    from above; used only to skip hopeless LPs.
    """
    count = 0
    remaining = mask
    while remaining:
        best_gain = 0
        best_pm = 0
        for pm in pm_masks:
            gain = bin(pm & remaining).count("1")
            if gain > best_gain:
                best_gain = gain
                best_pm = pm
        if best_gain == 0:
            return 1 << 60  # uncoverable edge; cannot bound
        remaining &= ~best_pm
        count += 1
    return count


def _support_lp_max(
    edges: Sequence[int], pms: Sequence[frozenset[int]]
) -> tuple[Fraction, tuple[Fraction, ...]]:
    """max sum(w_e) over e in edges, s.t. each PM's restriction <= 1."""
    index = {e: i for i, e in enumerate(edges)}
    rows = []
    seen_rows = set()
    for p in pms:
        coeffs = [Fraction(0)] * len(edges)
        hit = False
        for e in p:
            i = index.get(e)
            if i is not None:
                coeffs[i] = Fraction(1)
                hit = True
        if not hit:
            continue
        key = tuple(coeffs)
        if key in seen_rows:
            continue
        seen_rows.add(key)
        rows.append((coeffs, "<=", Fraction(1)))
    lp = program([Fraction(-1)] * len(edges), rows)
    sol = solve(lp)
    assert sol.status == OPTIMAL and sol.assignment is not None
    return -sol.value, sol.assignment


def eta_exact(
    g: Graph,
    *,
    maximal_count: int = MAXIMAL_COUNT_BUDGET,
    perfect_count: int = PERFECT_COUNT_BUDGET,
    vertex_limit: int | None = None,
) -> EtaResult:
    """Exact eta by LP over the enumerated matchings.

    Refuses graphs whose enumeration exceeds the given budgets.  Raise
    vertex_limit explicitly to run past the default enumeration sizes.
    The result carries a witness weighting, re-evaluated through the
    matching engines before returning.
    """
    zero, bad_edge = is_eta_zero(g)
    if zero:
        assert bad_edge is not None
        w = tuple(
            Fraction(1) if e == bad_edge else Fraction(0) for e in range(g.m)
        )
        arg = max_weight_matching(g, w)
        arg_w = matching_weight(w, arg)
        worst = max_weight_perfect_matching(g, w)
        worst_w = matching_weight(w, worst)
        assert arg_w == 1 and worst_w == 0
        return EtaResult(
            value=Fraction(0),
            witness_weights=w,
            argmax_matching=tuple(sorted(arg)),
            argmax_weight=arg_w,
            worst_pm_weight=worst_w,
        )

    pm_kw = {"count_budget": perfect_count}
    mm_kw = {"count_budget": maximal_count}
    if vertex_limit is not None:
        pm_kw["vertex_limit"] = vertex_limit
        mm_kw["vertex_limit"] = vertex_limit
    pms = enumerate_perfect_matchings(g, **pm_kw)
    maximals = enumerate_maximal_matchings(g, **mm_kw)
    pm_masks = _edge_masks(pms)

    best_s: Fraction | None = None
    best_edges: tuple[int, ...] | None = None
    best_assignment: tuple[Fraction, ...] | None = None
    for m in maximals:
        edges = tuple(sorted(m))
        mask = sum(1 << e for e in edges)
        if best_s is not None and _greedy_cover_count(mask, pm_masks) <= best_s:
            continue
        s, assignment = _support_lp_max(edges, pms)
        if best_s is None or s > best_s:
            best_s = s
            best_edges = edges
            best_assignment = assignment
    assert best_s is not None and best_edges is not None
    assert best_s >= 1

    w_list = [Fraction(0)] * g.m
    for e, val in zip(best_edges, best_assignment):
        w_list[e] = val
    w = validate_weights(g, w_list)
    value = 1 / best_s

    # independent re-evaluation of the witness
    arg = max_weight_matching(g, w)
    arg_w = matching_weight(w, arg)
    worst = max_weight_perfect_matching(g, w)
    worst_w = matching_weight(w, worst)
    assert arg_w == best_s, "witness argmax disagrees with the LP scan"
    assert worst_w == 1, "witness should make the best perfect matching tight"
    assert worst_w / arg_w == value
    return EtaResult(
        value=value,
        witness_weights=w,
        argmax_matching=tuple(sorted(arg)),
        argmax_weight=arg_w,
        worst_pm_weight=worst_w,
    )


# ---------------------------------------------------------------------------
# upper bounds from maximal matchings


def _exposed_bound(n: int, s: int) -> Fraction:
    return Fraction(n - 2 * s, n - s)


def maximal_matching_bound(g: Graph, m: Iterable[int]) -> BoundCertificate:
    """Upper bound from one maximal matching.

    Weighting the matching 1 and everything else 0 caps every perfect
    matching at |V|/2 - |S| of the |M| weight units, which yields
    bound (n - 2|S|) / (n - |S|) with S the exposed vertices.
    """
    mm = frozenset(m)
    if not is_matching(g, mm):
        raise IncludeNotMatching("bound needs a matching")
    exposed = unsaturated(g, mm)
    sat = saturated(g, mm)
    for u, v in g.edges:
        if u not in sat and v not in sat:
            raise BadParameters("matching is not maximal")
    return BoundCertificate(
        kind=INDEPENDENT_SET_UPPER,
        bound=_exposed_bound(g.n, len(exposed)),
        matching=tuple(sorted(mm)),
        independent_set=exposed,
    )


def best_maximal_matching_bound(
    g: Graph,
    *,
    maximal_count: int = MAXIMAL_COUNT_BUDGET,
    vertex_limit: int | None = None,
) -> BoundCertificate:
    """The strongest exposed-set bound: scan for a minimum maximal matching.

    The bound shrinks as the exposed set grows, so the full scan keeps
    the first maximal matching of minimum size (the stream is sorted,
    which fixes the tie-break).
    """
    kw = {"count_budget": maximal_count}
    if vertex_limit is not None:
        kw["vertex_limit"] = vertex_limit
    maximals = enumerate_maximal_matchings(g, **kw)
    best = min(maximals, key=lambda m: (len(m), tuple(sorted(m))))
    return maximal_matching_bound(g, best)


def find_independent_set_bound(
    g: Graph, set_size: int, *, node_budget: int = 10**7
) -> BoundCertificate | None:
    """Witness search: an independent S, |S| = set_size, with g - S matchable.

    A perfect matching of g - S is then a maximal matching of g exposing
    exactly S, so it certifies the exposed-set bound without scanning
    every maximal matching.  Vertices are tried in ascending order; the
    first witness wins.  Returns None if no such set exists.
    """
    if set_size < 0 or set_size > g.n:
        raise BadParameters(f"set size {set_size} out of range")
    if (g.n - set_size) % 2:
        return None
    chosen: list[int] = []
    nodes = 0

    def search(start: int) -> BoundCertificate | None:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded(f"witness search passed {node_budget} nodes")
        if len(chosen) == set_size:
            sub = delete(g, vertices=chosen)
            if not has_perfect_matching(sub.graph):
                return None
            pm = max_weight_perfect_matching(
                sub.graph, [Fraction(1)] * sub.graph.m
            )
            m = frozenset(sub.original_edge(e) for e in pm)
            return maximal_matching_bound(g, m)
        if g.n - start < set_size - len(chosen):
            return None
        for v in range(start, g.n):
            if any(g.has_edge(v, u) for u in chosen):
                continue
            chosen.append(v)
            hit = search(v + 1)
            if hit is not None:
                return hit
            chosen.pop()
            if g.n - v - 1 < set_size - len(chosen):
                break
        return None

    return search(0)


# ---------------------------------------------------------------------------
# cap bounds


def _cap_by_masks(m_mask: int, pm_masks: Sequence[int]) -> int:
    return max(bin(m_mask & pm).count("1") for pm in pm_masks)


def cap_certificate(
    g: Graph,
    m: Iterable[int],
    *,
    use_enumeration: bool = False,
    perfect_count: int = PERFECT_COUNT_BUDGET,
) -> BoundCertificate:
    """Upper bound cap/|m| where cap = max edges of m inside one perfect
    matching.

    Weighting m 1 and the rest 0 makes some matching worth |m| while no
    perfect matching exceeds cap.  The default route tests subsets of m
    from largest down with the forced-edge oracle and stops at the first
    extendable one; use_enumeration recomputes cap from the full perfect
    matching list instead (the two must agree).
    """
    from itertools import combinations

    mm = tuple(sorted(frozenset(m)))
    if not mm:
        raise BadParameters("cap bound needs a nonempty matching")
    if not is_matching(g, mm):
        raise IncludeNotMatching("cap bound needs a matching")
    if not has_perfect_matching(g):
        raise NoPerfectMatching("cap bound needs perfect matchings")
    cap: int | None = None
    if use_enumeration:
        pms = enumerate_perfect_matchings(g, count_budget=perfect_count)
        cap = _cap_by_masks(sum(1 << e for e in mm), _edge_masks(pms))
    else:
        for k in range(len(mm), -1, -1):
            for f in combinations(mm, k):
                if pm_with_forced_edges(g, f):
                    cap = k
                    break
            if cap is not None:
                break
    assert cap is not None
    return BoundCertificate(
        kind=CAP_UPPER,
        bound=Fraction(cap, len(mm)),
        matching=mm,
        cap=cap,
    )


def find_cap_matching(
    g: Graph,
    size: int,
    max_cap: int,
    *,
    perfect_count: int = PERFECT_COUNT_BUDGET,
    vertex_limit: int | None = None,
) -> frozenset[int] | None:
    """First matching of the given size whose cap is at most max_cap.

    Matchings are tried in lexicographic edge-id order.  The cap of a
    candidate is its largest overlap with any perfect matching, which
    equals the forced-subset cap that cap_certificate computes.  Returns
    None when no matching of that size passes.
    """
    if size < 1 or max_cap < 0:
        raise BadParameters("need size >= 1 and max_cap >= 0")
    kw = {"count_budget": perfect_count}
    if vertex_limit is not None:
        kw["vertex_limit"] = vertex_limit
    pms = enumerate_perfect_matchings(g, **kw)
    if not pms:
        raise NoPerfectMatching("cap search needs perfect matchings")
    pm_masks = _edge_masks(pms)
    used = [False] * g.n
    chosen: list[int] = []

    def search(start: int) -> frozenset[int] | None:
        if len(chosen) == size:
            mask = sum(1 << e for e in chosen)
            if _cap_by_masks(mask, pm_masks) <= max_cap:
                return frozenset(chosen)
            return None
        for eid in range(start, g.m - (size - len(chosen)) + 1):
            u, v = g.edges[eid]
            if used[u] or used[v]:
                continue
            used[u] = used[v] = True
            chosen.append(eid)
            hit = search(eid + 1)
            chosen.pop()
            used[u] = used[v] = False
            if hit is not None:
                return hit
        return None

    return search(0)


def odd_component_cert(g: Graph, f: Iterable[int]) -> BoundCertificate:
    """Cap bound justified by parity: delete f's endpoints, list components.

    Each odd component must send one vertex to the deleted set in any
    perfect matching, which limits how many edges of f a perfect
    matching can use.  The certificate records the components; the cap
    itself is recomputed with the forced-edge oracle.
    """
    from itertools import combinations

    ff = tuple(sorted(frozenset(f)))
    if not ff:
        raise BadParameters("need a nonempty edge set")
    if not is_matching(g, ff):
        raise IncludeNotMatching("parity bound needs a matching")
    if not has_perfect_matching(g):
        raise NoPerfectMatching("parity bound needs perfect matchings")
    sub = delete(g, vertices=saturated(g, ff))
    comps = tuple(
        tuple(sub.original_vertex(v) for v in comp)
        for comp in components(sub.graph)
    )
    cap: int | None = None
    for k in range(len(ff), -1, -1):
        for sel in combinations(ff, k):
            if pm_with_forced_edges(g, sel):
                cap = k
                break
        if cap is not None:
            break
    assert cap is not None
    return BoundCertificate(
        kind=ODD_COMPONENT_UPPER,
        bound=Fraction(cap, len(ff)),
        matching=ff,
        cap=cap,
        component_list=comps,
    )


# ---------------------------------------------------------------------------
# the 1/3 lower bound witness


def berge_witness(
    g: CubicGraph,
    *,
    perfect_count: int = PERFECT_COUNT_BUDGET,
    vertex_limit: int | None = None,
) -> BoundCertificate:
    """A family of perfect matchings covering every edge equally often.

    Solves for a rational convex combination of perfect matchings whose
    edge coverage is exactly 1/3 everywhere (feasible on every
    bridgeless cubic graph), then clears denominators: 3k matchings
    covering each edge k times.  Uniform weights then show that no
    weighting pushes the best perfect matching below a third of the
    best matching, hence eta >= 1/3.
    """
    ok, bridge = is_bridgeless(g)
    if not ok:
        raise BadParameters(f"graph has a bridge (edge {bridge})")
    kw = {"count_budget": perfect_count}
    if vertex_limit is not None:
        kw["vertex_limit"] = vertex_limit
    pms = enumerate_perfect_matchings(g, **kw)
    if not pms:
        raise NoPerfectMatching("no perfect matchings to combine")
    rows = []
    third = Fraction(1, 3)
    for eid in range(g.m):
        coeffs = [Fraction(1) if eid in p else Fraction(0) for p in pms]
        rows.append((coeffs, "=", third))
    sol = solve(program([Fraction(0)] * len(pms), rows))
    if sol.status != OPTIMAL or sol.assignment is None:
        raise BadParameters("no uniform fractional cover; graph not as claimed")
    mu = sol.assignment
    denom_lcm = 1
    for x in mu:
        if x:
            denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    scale = denom_lcm if denom_lcm % 3 == 0 else 3 * denom_lcm
    lam = [int(x * scale) for x in mu]
    families = tuple(
        (tuple(sorted(p)), l) for p, l in zip(pms, lam) if l > 0
    )
    cover = scale // 3
    assert sum(l for _, l in families) == 3 * cover
    return BoundCertificate(
        kind=BERGE_COVER_LOWER,
        bound=third,
        families=families,
        cover_count=cover,
    )


# ---------------------------------------------------------------------------
# verification and serialisation


def verify(g: Graph, cert: BoundCertificate) -> tuple[bool, str]:
    """Recheck a certificate from its raw data, via independent routes.

    Caps are recomputed from the enumerated perfect matchings even when
    the producer used the forced-edge oracle, so a fabricated cap value
    cannot slip through on either path.
    """
    if cert.kind == INDEPENDENT_SET_UPPER:
        if cert.matching is None or cert.independent_set is None:
            return False, "missing payload"
        m = frozenset(cert.matching)
        if not is_matching(g, m):
            return False, "matching field is not a matching"
        exposed = unsaturated(g, m)
        if tuple(cert.independent_set) != exposed:
            return False, "stated set is not the exposed vertex set"
        if not is_independent(g, exposed):
            return False, "exposed set not independent (matching not maximal)"
        sat = saturated(g, m)
        if any(u not in sat and v not in sat for u, v in g.edges):
            return False, "matching is not maximal"
        if cert.bound != _exposed_bound(g.n, len(exposed)):
            return False, "bound does not match the exposed-set formula"
        return True, "ok"

    if cert.kind in (CAP_UPPER, ODD_COMPONENT_UPPER):
        if cert.matching is None or cert.cap is None:
            return False, "missing payload"
        m = tuple(sorted(cert.matching))
        if not m or not is_matching(g, m):
            return False, "matching field is not a nonempty matching"
        try:
            pms = enumerate_perfect_matchings(g)
        except BudgetExceeded:
            return False, "perfect matchings not enumerable within budget"
        if not pms:
            return False, "graph has no perfect matching"
        cap = _cap_by_masks(sum(1 << e for e in m), _edge_masks(pms))
        if cap != cert.cap:
            return False, f"cap is {cap}, certificate says {cert.cap}"
        if cert.bound != Fraction(cap, len(m)):
            return False, "bound is not cap / |matching|"
        if cert.kind == ODD_COMPONENT_UPPER:
            if cert.component_list is None:
                return False, "missing components"
            sub = delete(g, vertices=saturated(g, m))
            comps = tuple(
                tuple(sub.original_vertex(v) for v in comp)
                for comp in components(sub.graph)
            )
            if tuple(cert.component_list) != comps:
                return False, "component list does not match the deletion"
        return True, "ok"

    if cert.kind == BERGE_COVER_LOWER:
        if cert.families is None or cert.cover_count is None:
            return False, "missing payload"
        k = cert.cover_count
        if k < 1:
            return False, "cover count must be positive"
        if cert.bound != Fraction(1, 3):
            return False, "bound of this kind is always 1/3"
        total = 0
        coverage = [0] * g.m
        for edges, mult in cert.families:
            if mult < 1:
                return False, "multiplicities must be positive"
            if len(edges) * 2 != g.n or not is_matching(g, edges):
                return False, "family member is not a perfect matching"
            total += mult
            for e in edges:
                coverage[e] += mult
        if total != 3 * k:
            return False, f"family size {total} is not 3 * {k}"
        if any(c != k for c in coverage):
            return False, "coverage is not uniform"
        return True, "ok"

    return False, f"unknown certificate kind {cert.kind!r}"


def _frac_json(x: Fraction) -> dict:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def _frac_from_json(d: dict) -> Fraction:
    try:
        return Fraction(int(d["num"]), int(d["den"]))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {d!r}") from exc


def cert_to_json(cert: BoundCertificate) -> dict:
    out: dict = {"kind": cert.kind, "bound": _frac_json(cert.bound)}
    if cert.matching is not None:
        out["matching"] = list(cert.matching)
    if cert.independent_set is not None:
        out["independent_set"] = list(cert.independent_set)
    if cert.cap is not None:
        out["cap"] = cert.cap
    if cert.families is not None:
        out["families"] = [
            {"edges": list(edges), "multiplicity": mult}
            for edges, mult in cert.families
        ]
    if cert.cover_count is not None:
        out["cover_count"] = cert.cover_count
    if cert.component_list is not None:
        out["components"] = [list(c) for c in cert.component_list]
    return out


def cert_from_json(data: dict) -> BoundCertificate:
    try:
        kind = data["kind"]
        bound = _frac_from_json(data["bound"])
        matching = (
            tuple(int(e) for e in data["matching"]) if "matching" in data else None
        )
        independent_set = (
            tuple(int(v) for v in data["independent_set"])
            if "independent_set" in data
            else None
        )
        cap = int(data["cap"]) if "cap" in data else None
        families = None
        if "families" in data:
            families = tuple(
                (tuple(int(e) for e in fam["edges"]), int(fam["multiplicity"]))
                for fam in data["families"]
            )
        cover_count = int(data["cover_count"]) if "cover_count" in data else None
        component_list = None
        if "components" in data:
            component_list = tuple(
                tuple(int(v) for v in c) for c in data["components"]
            )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed certificate: {exc}") from exc
    return BoundCertificate(
        kind=kind,
        bound=bound,
        matching=matching,
        independent_set=independent_set,
        cap=cap,
        families=families,
        cover_count=cover_count,
        component_list=component_list,
    )


def eta_result_to_json(res: EtaResult) -> dict:
    return {
        "value": _frac_json(res.value),
        "witness_weights": [_frac_json(w) for w in res.witness_weights],
        "argmax_matching": list(res.argmax_matching),
        "argmax_weight": _frac_json(res.argmax_weight),
        "worst_pm_weight": _frac_json(res.worst_pm_weight),
    }
