"""Matching engines: enumeration, blossom, forced edges, weight I/O."""

import random
from fractions import Fraction

import pytest

from matchforge import errors
from matchforge.generators import catalog, gp, named, random_cubic
from matchforge.graphs import from_edge_list
from matchforge.matching import (
    blossom_max_matching,
    enumerate_maximal_matchings,
    enumerate_perfect_matchings,
    format_weight_csv,
    has_perfect_matching,
    is_matching,
    is_maximal_matching,
    matching_weight,
    max_weight_matching,
    max_weight_perfect_matching,
    parse_weight_csv,
    pm_with_forced_edges,
    random_weights,
    saturated,
    shift_perfect_matching,
    uniform_weights,
    unsaturated,
    validate_weights,
)

# Counts verified against an independent subset-scan oracle.
FROZEN_COUNTS = {
    "k4": (3, 3, [2]),
    "k33": (6, 6, [3]),
    "cube": (9, 17, [3, 4]),
    "petersen": (6, 71, [3, 4, 5]),
}

PETERSEN_PMS = [
    [0, 2, 9, 10, 11],
    [0, 3, 7, 13, 14],
    [1, 3, 5, 11, 12],
    [1, 4, 8, 10, 14],
    [2, 4, 6, 12, 13],
    [5, 6, 7, 8, 9],
]


def test_matching_predicates():
    g = named("petersen")
    assert is_matching(g, [0, 2])
    assert not is_matching(g, [0, 1])  # share vertex 1
    assert saturated(g, [0]) == frozenset({0, 1})
    assert unsaturated(g, [0]) == tuple(range(2, 10))
    assert not is_maximal_matching(g, frozenset({0}))
    assert is_maximal_matching(g, frozenset(PETERSEN_PMS[0]))


def test_enumeration_frozen_counts():
    for label, (n_pm, n_max, sizes) in FROZEN_COUNTS.items():
        g = named(label)
        pms = enumerate_perfect_matchings(g)
        maxi = enumerate_maximal_matchings(g)
        assert len(pms) == n_pm, label
        assert len(maxi) == n_max, label
        assert sorted({len(m) for m in maxi}) == sizes, label
        assert set(pms) <= set(maxi)
        for m in maxi:
            assert is_maximal_matching(g, m)


def test_petersen_perfect_matchings_exact():
    pms = enumerate_perfect_matchings(named("petersen"))
    assert [sorted(m) for m in pms] == PETERSEN_PMS


def test_enumeration_vertex_limits():
    with pytest.raises(errors.BudgetExceeded):
        enumerate_maximal_matchings(named("nauru"))  # 24 > 20
    with pytest.raises(errors.BudgetExceeded):
        enumerate_perfect_matchings(gp(14, 1))  # 28 > 26
    assert len(enumerate_perfect_matchings(named("nauru"))) == 120
    assert len(enumerate_maximal_matchings(named("nauru"), vertex_limit=24)) == 15050


def test_enumeration_count_budgets():
    with pytest.raises(errors.BudgetExceeded):
        enumerate_maximal_matchings(named("petersen"), count_budget=70)
    with pytest.raises(errors.BudgetExceeded):
        enumerate_perfect_matchings(named("cube"), count_budget=8)


def test_weight_validation():
    g = named("k4")
    w = validate_weights(g, [1, "2/3", Fraction(1, 2), 0, 0, 4])
    assert w[1] == Fraction(2, 3)
    with pytest.raises(errors.BadWeights):
        validate_weights(g, [1, 2, 3])  # wrong length
    with pytest.raises(errors.BadWeights):
        validate_weights(g, [1, -1, 0, 0, 0, 0])
    with pytest.raises(errors.BadWeights):
        validate_weights(g, [0] * 6)  # all zero
    assert uniform_weights(g) == (Fraction(1),) * 6


def test_max_weight_matching_tie_and_zero_edges():
    g = named("cube")
    # spokes only: best matching picks all four spokes
    w = [Fraction(1) if 4 <= e < 8 else Fraction(0) for e in range(g.m)]
    m = max_weight_matching(g, w)
    assert matching_weight(w, m) == 4


def test_perfect_vs_unrestricted_gap():
    g = named("petersen")
    # unit weight on a size-3 maximal matching, tiny elsewhere
    w = [Fraction(0)] * g.m
    for e in (0, 8, 12):
        w[e] = Fraction(1)
    best = max_weight_matching(g, w)
    best_pm = max_weight_perfect_matching(g, w)
    assert matching_weight(w, best) == 3
    assert matching_weight(w, best_pm) == 1


def test_shift_route_matches_enumeration(seed=1212):
    rng = random.Random(seed)
    for g in catalog(16):
        pms = enumerate_perfect_matchings(g)
        for _ in range(25):
            w = random_weights(g, rng)
            got = shift_perfect_matching(g, w)
            assert saturated(g, got) == frozenset(range(g.n))
            best = max(matching_weight(w, p) for p in pms)
            assert matching_weight(w, got) == best


def test_blossom_route_matches_enumeration(seed=77):
    rng = random.Random(seed)
    for g in catalog(16):
        maxi = enumerate_maximal_matchings(g)
        for _ in range(25):
            w = random_weights(g, rng)
            got = blossom_max_matching(g, w)
            best = max(matching_weight(w, m) for m in maxi)
            assert matching_weight(w, got) == best


def test_blossom_shifted_weights_regression(seed=9000):
    # shift-sized offsets once broke base tracking inside nested blossoms
    g = gp(10, 2)
    rng = random.Random(seed)
    pms = None
    for _ in range(50):
        w = list(random_weights(g, rng))
        shift = 1 + sum(w)
        shifted = [x + shift for x in w]
        got = shift_perfect_matching(g, w)
        assert saturated(g, got) == frozenset(range(g.n))
        direct = blossom_max_matching(g, shifted)
        assert matching_weight(shifted, direct) == matching_weight(shifted, got)


def test_shift_perfect_matching_failures():
    with pytest.raises(errors.NoPerfectMatching):
        shift_perfect_matching(from_edge_list(3, [(0, 1), (1, 2)]), [1, 1])
    two_triangles = from_edge_list(
        6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
    )
    with pytest.raises(errors.NoPerfectMatching):
        shift_perfect_matching(two_triangles, [1] * 6)


def test_has_perfect_matching_random_agreement(seed=31):
    rng = random.Random(seed)
    for _ in range(20):
        g = random_cubic(rng.choice([6, 8, 10, 12]), rng)
        assert has_perfect_matching(g) == bool(enumerate_perfect_matchings(g))


def test_pm_with_forced_edges():
    g = named("petersen")
    assert pm_with_forced_edges(g, [0])
    assert pm_with_forced_edges(g, [0, 2])
    # edges 0 and 3 both lie on the outer cycle with a vertex gap; no PM
    # contains both (none of the six frozen PMs does)
    assert not pm_with_forced_edges(g, [0, 3], exclude=[7, 13, 14])
    assert not pm_with_forced_edges(g, [0], exclude=[2, 3])
    with pytest.raises(errors.IncludeNotMatching):
        pm_with_forced_edges(g, [0, 1])
    with pytest.raises(errors.IncludeNotMatching):
        pm_with_forced_edges(g, [0], exclude=[0])


def test_weight_csv_round_trip(seed=5):
    g = named("cube")
    w = random_weights(g, random.Random(seed))
    text = format_weight_csv(w)
    assert parse_weight_csv(text, g.m) == w


def test_weight_csv_parse_errors():
    with pytest.raises(errors.ParseError):
        parse_weight_csv("0,1\n0,2\n", 1)  # duplicate
    with pytest.raises(errors.ParseError):
        parse_weight_csv("0,1\n", 2)  # missing id 1
    with pytest.raises(errors.ParseError):
        parse_weight_csv("5,1\n", 2)  # id out of range
    with pytest.raises(errors.ParseError):
        parse_weight_csv("0;1\n", 1)
    with pytest.raises(errors.ParseError):
        parse_weight_csv("0,1/0\n", 1)
    assert parse_weight_csv("# note\n\n0,3/4\n", 1) == (Fraction(3, 4),)


def test_random_weights_in_range(seed=16):
    g = named("k4")
    rng = random.Random(seed)
    for _ in range(50):
        w = random_weights(g, rng, max_numerator=5, max_denominator=3)
        assert any(x > 0 for x in w)
        for x in w:
            assert 0 <= x <= 5
            assert x.denominator <= 3
