"""Constructions for cubic graphs: catalog entries and composite builders.

All builders are deterministic: the same call yields the same vertex
numbering and edge-id layout, so certificates keyed on ids stay valid
across runs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .errors import BadParameters, SpecInvalid, UnknownLabel
from .graphs import CubicGraph, Graph, as_cubic, from_edge_list


@dataclass(frozen=True)
class GraphFlags:
    """Known structural facts; None means not asserted."""

    planar: bool | None = None
    bipartite: bool | None = None
    hamiltonian: bool | None = None
    snark: bool | None = None


class NamedGraph(CubicGraph):
    """A catalog graph: a CubicGraph plus a name and metadata flags."""

    __slots__ = ("name", "flags")

    def __init__(
        self,
        n: int,
        edges: tuple[tuple[int, int], ...],
        name: str,
        flags: GraphFlags,
    ):
        super().__init__(n, edges)
        self.name = name
        self.flags = flags

    def __repr__(self) -> str:
        return f"NamedGraph({self.name!r}, n={self.n}, m={self.m})"


def _named(g: Graph, name: str, flags: GraphFlags) -> NamedGraph:
    cg = as_cubic(g)
    return NamedGraph(cg.n, cg.edges, name, flags)


def gp(n: int, k: int) -> CubicGraph:
    """Generalized Petersen graph on 2n vertices.

    Outer cycle u_0..u_{n-1} (ids 0..n-1), spokes u_i v_i, inner star
    v_i v_{i+k mod n} (v_i has id n+i).  Requires n >= 3 and
    1 <= k <= floor((n-1)/2), which keeps the graph simple and cubic.
    """
    if n < 3 or k < 1 or 2 * k >= n:
        raise BadParameters(f"gp({n}, {k}): need n >= 3 and 1 <= k <= (n-1)//2")
    pairs: list[tuple[int, int]] = []
    pairs.extend((i, (i + 1) % n) for i in range(n))
    pairs.extend((i, n + i) for i in range(n))
    pairs.extend((n + i, n + (i + k) % n) for i in range(n))
    return as_cubic(from_edge_list(2 * n, pairs))


_K4_PAIRS = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
_K33_PAIRS = [(u, v) for u in (0, 1, 2) for v in (3, 4, 5)]


def _petersen() -> CubicGraph:
    return gp(5, 2)


def _blanusa(distance: int) -> CubicGraph:
    """Dot product of two Petersen copies.

    The first copy loses the adjacent vertices 0 and 1; the second loses
    two disjoint edges whose endpoint distance is `distance` (1 or 2).
    Both removed-edge choices are the lexicographically first with the
    required distance.
    """
    p = _petersen()
    if distance == 2:
        removed = (0, 8)  # edges (0,1) and (3,8)
        pairing = ((0, 4), (1, 5), (3, 2), (8, 6))
    elif distance == 1:
        removed = (0, 2)  # edges (0,1) and (2,3)
        pairing = ((0, 4), (1, 5), (2, 2), (3, 6))
    else:
        raise BadParameters(f"blanusa distance must be 1 or 2, got {distance}")
    spec = DotProductSpec(
        left=p, x=0, y=1, right=p, removed_edges=removed, pairing=pairing
    )
    return dot_product(spec)


def named(label: str) -> NamedGraph:
    """Catalog lookup by label.

    Labels: k4, k33, cube, petersen, nauru, blanusa1, blanusa2.
    Raises UnknownLabel on anything else.
    """
    if label == "k4":
        return _named(
            from_edge_list(4, _K4_PAIRS),
            "k4",
            GraphFlags(planar=True, bipartite=False, hamiltonian=True, snark=False),
        )
    if label == "k33":
        return _named(
            from_edge_list(6, _K33_PAIRS),
            "k33",
            GraphFlags(planar=False, bipartite=True, hamiltonian=True, snark=False),
        )
    if label == "cube":
        return _named(
            gp(4, 1),
            "cube",
            GraphFlags(planar=True, bipartite=True, hamiltonian=True, snark=False),
        )
    if label == "petersen":
        return _named(
            gp(5, 2),
            "petersen",
            GraphFlags(planar=False, bipartite=False, hamiltonian=False, snark=True),
        )
    if label == "nauru":
        return _named(
            gp(12, 5),
            "nauru",
            GraphFlags(planar=False, bipartite=True, hamiltonian=True, snark=False),
        )
    if label == "blanusa1":
        return _named(
            _blanusa(2),
            "blanusa1",
            GraphFlags(planar=False, bipartite=False, hamiltonian=False, snark=True),
        )
    if label == "blanusa2":
        return _named(
            _blanusa(1),
            "blanusa2",
            GraphFlags(planar=False, bipartite=False, hamiltonian=False, snark=True),
        )
    raise UnknownLabel(f"no catalog entry named {label!r}")


def catalog(max_vertices: int | None = None) -> tuple[NamedGraph, ...]:
    """All stock graphs, smallest first.

    Includes the named labels plus the prisms and two other small
    generalized Petersen graphs, so bound checks have bipartite,
    planar and snark representatives at every small order.
    """
    entries = [
        named("k4"),
        named("k33"),
        _named(gp(3, 1), "gp(3,1)", GraphFlags(planar=True, bipartite=False, hamiltonian=True, snark=False)),
        named("cube"),
        _named(gp(5, 1), "gp(5,1)", GraphFlags(planar=True, bipartite=False, hamiltonian=True, snark=False)),
        named("petersen"),
        _named(gp(6, 1), "gp(6,1)", GraphFlags(planar=True, bipartite=True, hamiltonian=True, snark=False)),
        _named(gp(6, 2), "gp(6,2)", GraphFlags(planar=True, bipartite=False, hamiltonian=True, snark=False)),
        _named(gp(8, 3), "gp(8,3)", GraphFlags(planar=False, bipartite=True, hamiltonian=True, snark=False)),
        named("blanusa1"),
        named("blanusa2"),
        named("nauru"),
    ]
    if max_vertices is not None:
        entries = [g for g in entries if g.n <= max_vertices]
    return tuple(entries)


# ---------------------------------------------------------------------------
# dot product


@dataclass(frozen=True)
class DotProductSpec:
    """Description of a dot-product join.

    `left` loses the adjacent vertices x and y.  `right` loses the two
    disjoint edges in removed_edges.  `pairing` lists the four new
    cross edges as (right_vertex, left_vertex): the endpoints of the
    first removed edge must pair with x's two remaining neighbours and
    the endpoints of the second with y's.
    """

    left: CubicGraph
    x: int
    y: int
    right: CubicGraph
    removed_edges: tuple[int, int]
    pairing: tuple[tuple[int, int], ...]


def _validate_dot_spec(spec: DotProductSpec) -> tuple[set[int], set[int]]:
    g, h = spec.left, spec.right
    if not (0 <= spec.x < g.n and 0 <= spec.y < g.n):
        raise SpecInvalid("x or y out of range")
    if g.edge_id(spec.x, spec.y) is None:
        raise SpecInvalid("x and y must be adjacent")
    ea, eb = spec.removed_edges
    if not (0 <= ea < h.m and 0 <= eb < h.m) or ea == eb:
        raise SpecInvalid("removed edges must be two distinct edge ids")
    a1, a2 = h.endpoints(ea)
    b1, b2 = h.endpoints(eb)
    if len({a1, a2, b1, b2}) != 4:
        raise SpecInvalid("removed edges must be disjoint")
    x_side = set(g.neighbors(spec.x)) - {spec.y}
    y_side = set(g.neighbors(spec.y)) - {spec.x}
    if len(x_side) != 2 or len(y_side) != 2 or x_side & y_side:
        raise SpecInvalid("deleted endpoints must leave four distinct stubs")
    if len(spec.pairing) != 4:
        raise SpecInvalid("pairing must have four entries")
    right_used = [rv for rv, _ in spec.pairing]
    left_used = [lv for _, lv in spec.pairing]
    if sorted(right_used) != sorted([a1, a2, b1, b2]):
        raise SpecInvalid("pairing must use each removed-edge endpoint once")
    if sorted(left_used) != sorted(x_side | y_side):
        raise SpecInvalid("pairing must use each stub once")
    pair_of = dict(spec.pairing)
    if {pair_of[a1], pair_of[a2]} != x_side or {pair_of[b1], pair_of[b2]} != y_side:
        raise SpecInvalid(
            "first removed edge must join x's stubs, second y's stubs"
        )
    return x_side, y_side


def dot_product(spec: DotProductSpec) -> CubicGraph:
    """Join two cubic graphs into one on |left| + |right| - 2 vertices.

    Left vertices keep their order (x and y removed, rest renumbered
    densely); right vertices follow.  When both inputs carry a snark
    flag the output is flagged snark as well: a 3-edge-colouring of the
    product would force one of the factors to admit one.
    """
    _validate_dot_spec(spec)
    g, h = spec.left, spec.right
    keep = [v for v in range(g.n) if v not in (spec.x, spec.y)]
    gid = {v: i for i, v in enumerate(keep)}
    off = len(keep)
    pairs: list[tuple[int, int]] = []
    for u, v in g.edges:
        if spec.x in (u, v) or spec.y in (u, v):
            continue
        pairs.append((gid[u], gid[v]))
    for eid, (u, v) in enumerate(h.edges):
        if eid in spec.removed_edges:
            continue
        pairs.append((off + u, off + v))
    for rv, lv in spec.pairing:
        pairs.append((gid[lv], off + rv))
    out = as_cubic(from_edge_list(g.n + h.n - 2, pairs))
    left_snark = isinstance(g, NamedGraph) and g.flags.snark
    right_snark = isinstance(h, NamedGraph) and h.flags.snark
    if left_snark and right_snark:
        name = f"{g.name}*{h.name}"  # type: ignore[union-attr]
        return NamedGraph(
            out.n,
            out.edges,
            name,
            GraphFlags(planar=False, bipartite=False, hamiltonian=False, snark=True),
        )
    return out


# ---------------------------------------------------------------------------
# simple joins


def vertex_join(
    g: CubicGraph,
    u: int,
    h: CubicGraph,
    v: int,
    pairing: Iterable[tuple[int, int]],
) -> CubicGraph:
    """Remove u from g and v from h, then wire the stubs together.

    `pairing` is a bijection (g_neighbour, h_neighbour) with three
    entries.  Output order is |g| + |h| - 2.
    """
    pairing = tuple(pairing)
    if not (0 <= u < g.n and 0 <= v < h.n):
        raise SpecInvalid("join vertex out of range")
    gn = set(g.neighbors(u))
    hn = set(h.neighbors(v))
    if sorted(a for a, _ in pairing) != sorted(gn) or sorted(
        b for _, b in pairing
    ) != sorted(hn):
        raise SpecInvalid("pairing must match the deleted vertices' neighbours")
    keep = [w for w in range(g.n) if w != u]
    gid = {w: i for i, w in enumerate(keep)}
    off = len(keep)
    hid = {w: off + (w if w < v else w - 1) for w in range(h.n) if w != v}
    pairs = [(gid[a], gid[b]) for a, b in g.edges if u not in (a, b)]
    pairs += [(hid[a], hid[b]) for a, b in h.edges if v not in (a, b)]
    pairs += [(gid[a], hid[b]) for a, b in pairing]
    return as_cubic(from_edge_list(g.n + h.n - 2, pairs))


def edge_join(
    g: CubicGraph,
    e: int,
    h: CubicGraph,
    f: int,
    pairing: Iterable[tuple[int, int]],
) -> CubicGraph:
    """Remove edge e from g and f from h, then add two cross edges.

    `pairing` maps each endpoint of e to one endpoint of f.  Output
    order is |g| + |h|.
    """
    pairing = tuple(pairing)
    eu, ev = g.endpoints(e)
    fu, fv = h.endpoints(f)
    if sorted(a for a, _ in pairing) != sorted((eu, ev)) or sorted(
        b for _, b in pairing
    ) != sorted((fu, fv)):
        raise SpecInvalid("pairing must match the removed edges' endpoints")
    pairs = [(a, b) for i, (a, b) in enumerate(g.edges) if i != e]
    pairs += [(g.n + a, g.n + b) for i, (a, b) in enumerate(h.edges) if i != f]
    pairs += [(a, g.n + b) for a, b in pairing]
    return as_cubic(from_edge_list(g.n + h.n, pairs))


def bridge_join(g: CubicGraph, e: int, h: CubicGraph, f: int) -> CubicGraph:
    """Subdivide one edge in each graph and connect the two new vertices.

    The connecting edge is a bridge, so the result is cubic but not
    bridgeless.  Used to produce test instances with unmatchable edges.
    """
    eu, ev = g.endpoints(e)
    fu, fv = h.endpoints(f)
    s1 = g.n + h.n
    s2 = s1 + 1
    pairs = [(a, b) for i, (a, b) in enumerate(g.edges) if i != e]
    pairs += [(g.n + a, g.n + b) for i, (a, b) in enumerate(h.edges) if i != f]
    pairs += [(eu, s1), (ev, s1), (g.n + fu, s2), (g.n + fv, s2), (s1, s2)]
    return as_cubic(from_edge_list(g.n + h.n + 2, pairs))


# ---------------------------------------------------------------------------
# an infinite family pinned to the 1/3 lower bound


def eta_third_family(depth: int) -> tuple[CubicGraph, frozenset[int]]:
    """Member `depth` of a doubling snark family, with its witness matching.

    Member 0 is the Petersen graph with its lexicographically first
    maximal matching of size 3.  Member d joins two copies of member
    d-1: in each copy, take the first non-matching edge joining a
    saturated vertex to an unsaturated one, delete it, and reconnect
    the four loose ends crosswise so that every new edge again has
    exactly one saturated endpoint.  The matching stays maximal, its
    unsaturated set stays independent, and |M| = 3|V|/10 throughout.
    """
    if depth < 0 or depth > 11:
        raise BadParameters(f"family depth must be in 0..11, got {depth}")
    from .matching import enumerate_maximal_matchings

    g: CubicGraph = _petersen()
    m: frozenset[int] = frozenset()
    for cand in enumerate_maximal_matchings(g):
        if len(cand) == 3:
            m = cand
            break
    if not m:
        raise SpecInvalid("no size-3 maximal matching in the base graph")
    for _ in range(depth):
        g, m = _family_join(g, m)
    return g, m


def _family_join(
    g: CubicGraph, m: frozenset[int]
) -> tuple[CubicGraph, frozenset[int]]:
    saturated = set()
    for eid in m:
        saturated.update(g.endpoints(eid))
    joint = None
    for eid, (u, v) in enumerate(g.edges):
        if eid in m:
            continue
        su, sv = u in saturated, v in saturated
        if su != sv:
            joint = (eid, u if su else v, v if su else u)
            break
    if joint is None:
        raise SpecInvalid("no join edge with exactly one saturated endpoint")
    cut, sat, unsat = joint
    off = g.n
    pairs: list[tuple[int, int]] = []
    for eid, (u, v) in enumerate(g.edges):
        if eid != cut:
            pairs.append((u, v))
    for eid, (u, v) in enumerate(g.edges):
        if eid != cut:
            pairs.append((off + u, off + v))
    # saturated end gains the other copy's unsaturated end and vice versa
    pairs.append((sat, off + unsat))
    pairs.append((unsat, off + sat))
    out = as_cubic(from_edge_list(2 * g.n, pairs))
    new_m = set()
    for eid in m:
        u, v = g.endpoints(eid)
        a = out.edge_id(u, v)
        b = out.edge_id(off + u, off + v)
        if a is None or b is None:
            raise SpecInvalid("matching edge lost during join")
        new_m.add(a)
        new_m.add(b)
    return out, frozenset(new_m)


# ---------------------------------------------------------------------------
# auxiliary instances


def random_cubic(n: int, rng: random.Random, max_tries: int = 10000) -> CubicGraph:
    """Uniform-ish connected cubic graph via stub pairing with rejection."""
    if n < 4 or n % 2:
        raise BadParameters(f"cubic graphs need even n >= 4, got {n}")
    from .graphs import components

    for _ in range(max_tries):
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        pairs = [
            (stubs[i], stubs[i + 1]) for i in range(0, 3 * n, 2)
        ]
        seen = set()
        ok = True
        for u, v in pairs:
            if u == v or (min(u, v), max(u, v)) in seen:
                ok = False
                break
            seen.add((min(u, v), max(u, v)))
        if not ok:
            continue
        g = from_edge_list(n, pairs)
        if len(components(g)) == 1:
            return as_cubic(g)
    raise BadParameters(f"no simple connected pairing found for n={n}")


def odd_component_example() -> CubicGraph:
    """A 22-vertex bipartite bridgeless cubic graph built for parity proofs.

    Edges 0 and 1 form a 2-matching whose endpoint deletion splits the
    rest into three components, two of odd size: two K_{2,3} blocks and
    a cube missing one edge.  Any perfect matching therefore uses at
    most one of the two edges.
    """
    pairs = [
        (0, 1), (2, 3),
        # first K_{2,3}: hubs 4,5 and stubs 6,7,8
        (4, 6), (4, 7), (4, 8), (5, 6), (5, 7), (5, 8),
        # second K_{2,3}: hubs 9,10 and stubs 11,12,13
        (9, 11), (9, 12), (9, 13), (10, 11), (10, 12), (10, 13),
        # cube on 14..21 with edge (14,15) removed
        (15, 16), (16, 17), (14, 17),
        (14, 18), (15, 19), (16, 20), (17, 21),
        (18, 19), (19, 20), (20, 21), (18, 21),
        # wiring
        (1, 6), (1, 7), (3, 8), (3, 14),
        (0, 11), (0, 12), (2, 13), (2, 15),
    ]
    return as_cubic(from_edge_list(22, pairs))
