"""Self-contained checks of the library's headline results.

Each check recomputes a documented value from scratch and fails loudly
on any mismatch.  run_checks drives them with per-check wall clocks;
the gated checks repeat slow computations (a six-minute exact eta among
them) and only run on request.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, IO

from . import DEFAULT_SEED
from .classify import hamiltonian_cycle, is_bridgeless, is_snark, tait_coloring
from .errors import BudgetExceeded, NoPerfectMatching
from .eta import (
    berge_witness,
    best_maximal_matching_bound,
    cap_certificate,
    eta_exact,
    find_cap_matching,
    find_independent_set_bound,
    is_eta_one,
    is_eta_zero,
    maximal_matching_bound,
    verify,
)
from .generators import (
    bridge_join,
    catalog,
    eta_third_family,
    gp,
    named,
    random_cubic,
)
from .graphs import from_edge_list
from .matching import (
    blossom_max_matching,
    enumerate_maximal_matchings,
    enumerate_perfect_matchings,
    has_perfect_matching,
    matching_weight,
    random_weights,
    shift_perfect_matching,
)
from .mesh import dual_graph, icosahedron, quadrangulate, tetrahedron

THIRD = Fraction(1, 3)
HALF = Fraction(1, 2)


@dataclass
class CheckOutcome:
    check_id: str
    label: str
    ok: bool
    detail: str
    seconds: float
    limit: float | None


def _check_eta_petersen() -> str:
    r = eta_exact(named("petersen"))
    assert r.value == THIRD, f"eta {r.value}"
    assert r.worst_pm_weight == 1
    assert r.worst_pm_weight / r.argmax_weight == THIRD
    return f"eta = {r.value}, witness argmax {r.argmax_matching}"


def _check_eta_k33() -> str:
    g = named("k33")
    r = eta_exact(g)
    assert r.value == 1, f"eta {r.value}"
    one, _ = is_eta_one(g)
    assert one
    return "eta = 1 and every maximal matching is perfect"


def _check_eta_path() -> str:
    g = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    r = eta_exact(g)
    assert r.value == 0, f"eta {r.value}"
    zero, edge = is_eta_zero(g)
    assert zero and edge == 1
    return "eta = 0, middle edge lies in no perfect matching"


def _check_exposed_set_bounds() -> str:
    c = best_maximal_matching_bound(named("petersen"))
    assert c.bound == THIRD and len(c.independent_set) == 4, c
    ok, msg = verify(named("petersen"), c)
    assert ok, msg
    c = find_independent_set_bound(named("nauru"), 8)
    assert c is not None, "no 8-vertex witness on nauru"
    assert c.bound == HALF and len(c.independent_set) == 8, c
    ok, msg = verify(named("nauru"), c)
    assert ok, msg
    c = best_maximal_matching_bound(named("blanusa2"))
    assert c.bound == HALF and len(c.independent_set) == 6, c
    c = best_maximal_matching_bound(named("k4"))
    assert c.bound == 1 and len(c.independent_set) == 0, c
    return "petersen 1/3 (|S|=4), nauru 1/2 (|S|=8), blanusa2 1/2 (|S|=6), k4 1"


def _check_cap_certificates() -> str:
    cube = named("cube")
    m = find_cap_matching(cube, 3, 2)
    assert m is not None
    c = cap_certificate(cube, m)
    assert c.cap == 2 and c.bound == Fraction(2, 3), c
    pet = named("petersen")
    m = find_cap_matching(pet, 3, 1)
    assert m is not None
    c = cap_certificate(pet, m)
    assert c.cap == 1 and c.bound == THIRD, c
    b1 = named("blanusa1")
    m = find_cap_matching(b1, 5, 2)
    assert m is not None, "no 5-matching of cap 2 on blanusa1"
    c = cap_certificate(b1, m)
    assert c.bound == Fraction(2, 5), c
    ok, msg = verify(b1, c)
    assert ok, msg
    b2 = named("blanusa2")
    m = find_cap_matching(b2, 6, 4)
    assert m is not None, "no 6-matching of cap <= 4 on blanusa2"
    c = cap_certificate(b2, m)
    assert c.bound <= Fraction(2, 3), c
    ok, msg = verify(b2, c)
    assert ok, msg
    return "cube 2/3, petersen 1/3, blanusa1 2/5, blanusa2 <= 2/3"


def _check_berge_covers() -> str:
    count = 0
    for g in catalog(20):
        b = berge_witness(g)
        ok, msg = verify(g, b)
        assert ok, (g.name, msg)
        if g.name == "petersen":
            assert b.cover_count == 2
            assert len(b.families) == 6
            assert all(mult == 1 for _, mult in b.families)
        count += 1
    return f"{count} catalog graphs carry a uniform cover; petersen k = 2"


def _check_boundary_equivalences() -> str:
    ran = 0
    for g in catalog(24):
        try:
            r = eta_exact(g)
        except BudgetExceeded:
            continue
        zero, _ = is_eta_zero(g)
        one, _ = is_eta_one(g)
        assert (r.value == 0) == zero, g.name
        assert (r.value == 1) == one, g.name
        ran += 1
    rng = random.Random(DEFAULT_SEED)
    found = 0
    attempts = 0
    while found < 50:
        attempts += 1
        assert attempts < 1000, "bridged sampling stalled"
        ga = random_cubic(rng.choice([6, 8, 10]), rng)
        gb = random_cubic(rng.choice([6, 8, 10]), rng)
        joined = bridge_join(
            ga, rng.randrange(ga.m), gb, rng.randrange(gb.m)
        )
        if not has_perfect_matching(joined):
            continue
        zero, _ = is_eta_zero(joined)
        assert zero, "bridged graph with every edge in some perfect matching"
        found += 1
    return f"{ran} catalog graphs agree at 0/1; {found} bridged graphs all eta 0"


def _family_structure(d: int) -> None:
    g, m = eta_third_family(d)
    assert len(m) * 10 == 3 * g.n, (d, len(m), g.n)
    c = maximal_matching_bound(g, m)
    assert c.bound == THIRD, (d, c.bound)
    ok, msg = verify(g, c)
    assert ok, (d, msg)


def _check_snark_family() -> str:
    for d in (0, 1, 2):
        _family_structure(d)
    for d in (0, 1):
        g, _ = eta_third_family(d)
        assert is_snark(g), d
    return "d in {0,1,2}: |M| = 3n/10 and bound 1/3; d <= 1 snarks"


def _check_classifiers() -> str:
    assert tait_coloring(named("petersen")) is None
    colored = 0
    for n in range(3, 11):
        for k in range(1, (n - 1) // 2 + 1):
            c = tait_coloring(gp(n, k))
            if (n, k) == (5, 2):
                assert c is None, "gp(5,2) got a coloring"
            else:
                assert c is not None, f"gp({n},{k}) not colored"
                colored += 1
    assert hamiltonian_cycle(named("petersen")) is None
    assert hamiltonian_cycle(named("cube")) is not None
    return f"{colored} generalized Petersen graphs colored; gp(5,2) alone is not"


def _check_engine_agreement() -> str:
    rng = random.Random(DEFAULT_SEED)
    trials = 0
    for g in catalog(12):
        maximals = enumerate_maximal_matchings(g)
        pms = enumerate_perfect_matchings(g)
        for _ in range(200):
            w = random_weights(g, rng)
            wb = matching_weight(w, blossom_max_matching(g, w))
            we = max(matching_weight(w, m) for m in maximals)
            assert wb == we, g.name
            ws = matching_weight(w, shift_perfect_matching(g, w))
            wp = max(matching_weight(w, p) for p in pms)
            assert ws == wp, g.name
            trials += 1
    return f"{trials} draws: blossom = enumeration, shift = perfect enumeration"


def _check_mesh_pipeline() -> str:
    tet = tetrahedron()
    d = dual_graph(tet)
    assert d.graph.n == 4 and d.graph.m == 6, "tetrahedron dual is not K4"
    ico = icosahedron()
    d = dual_graph(ico)
    ok, _ = is_bridgeless(d.graph)
    assert ok and d.graph.n == 20 and d.graph.m == 30
    _, rep = quadrangulate(ico, mode="perfect")
    assert rep.quad_count == 10 and rep.triangle_count == 0, rep
    rng = random.Random(DEFAULT_SEED)
    for _ in range(1000):
        w = random_weights(d.graph, rng)
        _, rep = quadrangulate(ico, mode="maximum", weights=w)
        assert THIRD <= rep.ratio <= 1, rep.ratio
    return "tetra dual K4; ico dual bridgeless cubic; 1000 ratios in [1/3, 1]"


def _check_exclusions() -> str:
    try:
        eta_exact(named("nauru"))
    except BudgetExceeded:
        pass
    else:
        raise AssertionError("nauru exact eta ran inside default budgets")
    return "nauru exact eta refused at default budgets (run the gated check)"


def _check_nauru_full_scan() -> str:
    c = best_maximal_matching_bound(named("nauru"), vertex_limit=24)
    assert c.bound == HALF and len(c.independent_set) == 8, c
    ok, msg = verify(named("nauru"), c)
    assert ok, msg
    return f"full scan: bound 1/2 at matching {c.matching}"


def _check_family_d2_snark() -> str:
    g, _ = eta_third_family(2)
    assert is_snark(g)
    return f"depth-2 member ({g.n} vertices) is a snark"


def _check_nauru_eta() -> str:
    r = eta_exact(named("nauru"), vertex_limit=24)
    assert r.value == HALF, r.value
    return "exact eta(nauru) = 1/2, matching its exposed-set bound"


@dataclass(frozen=True)
class Check:
    check_id: str
    label: str
    limit: float | None
    gated: bool
    func: Callable[[], str]


CHECKS: tuple[Check, ...] = (
    Check("1", "exact eta of petersen", 30.0, False, _check_eta_petersen),
    Check("2", "exact eta of k33", 5.0, False, _check_eta_k33),
    Check("3", "exact eta of the 3-edge path", 1.0, False, _check_eta_path),
    Check("4", "exposed-set bounds", 120.0, False, _check_exposed_set_bounds),
    Check("5", "cap certificates", 180.0, False, _check_cap_certificates),
    Check("6", "uniform cover witnesses", 60.0, False, _check_berge_covers),
    Check("7", "boundary equivalences", 120.0, False, _check_boundary_equivalences),
    Check("8", "one-third snark family", 120.0, False, _check_snark_family),
    Check("9", "classifier ground truth", 60.0, False, _check_classifiers),
    Check("10", "matching engine agreement", 180.0, False, _check_engine_agreement),
    Check("11", "mesh pipeline", 120.0, False, _check_mesh_pipeline),
    Check("12", "default budget exclusions", 5.0, False, _check_exclusions),
    Check("4-full", "nauru full maximal scan", None, True, _check_nauru_full_scan),
    Check("8-full", "family depth-2 snark", None, True, _check_family_d2_snark),
    Check("nauru-eta", "exact eta of nauru", None, True, _check_nauru_eta),
)


def run_checks(
    ids: list[str] | None = None,
    include_gated: bool = False,
    stream: IO[str] | None = None,
) -> list[CheckOutcome]:
    """Run the selected checks, printing one line per check to stream."""
    selected = []
    for chk in CHECKS:
        if ids is not None:
            if chk.check_id in ids:
                selected.append(chk)
        elif include_gated or not chk.gated:
            selected.append(chk)
    out = []
    for chk in selected:
        t0 = time.time()
        try:
            detail = chk.func()
            ok = True
        except (AssertionError, BudgetExceeded, NoPerfectMatching) as exc:
            detail = f"{type(exc).__name__}: {exc}"
            ok = False
        elapsed = time.time() - t0
        if ok and chk.limit is not None and elapsed > chk.limit:
            ok = False
            detail += f" [exceeded {chk.limit:.0f}s limit]"
        outcome = CheckOutcome(
            check_id=chk.check_id,
            label=chk.label,
            ok=ok,
            detail=detail,
            seconds=elapsed,
            limit=chk.limit,
        )
        out.append(outcome)
        if stream is not None:
            mark = "ok  " if ok else "FAIL"
            stream.write(
                f"{mark} [{chk.check_id:>9}] {chk.label}: {detail} "
                f"({elapsed:.2f}s)\n"
            )
            stream.flush()
    return out
