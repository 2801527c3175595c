"""Tests for the density layer; the O(n^4) tuple scan serves as the oracle."""

import random
from fractions import Fraction
from itertools import product

import pytest

from halfgraph.density import (
    c4_density,
    c4_lower_general,
    c4_lower_no_2matching,
    c4_lower_trivial,
    density_report,
    e_rel,
    max_degree_rel,
    partition_densities,
    rho,
)
from halfgraph.graphcore import (
    Graph,
    blowup,
    cycle,
    enumerate_triangle_free,
    has_induced_2matching,
    named,
    path,
)

# the three labeled 4-cycles on positions (0,1,2,3): (cycle pairs, diagonals)
_C4_STRUCTURES = [
    (((0, 1), (1, 2), (2, 3), (3, 0)), ((0, 2), (1, 3))),
    (((0, 1), (1, 3), (3, 2), (2, 0)), ((0, 3), (1, 2))),
    (((0, 2), (2, 1), (1, 3), (3, 0)), ((0, 1), (2, 3))),
]


def c4_brute(g: Graph) -> Fraction:
    """Oracle: scan all n^4 ordered tuples and test the sampled pattern."""
    hits = 0
    for tup in product(range(g.n), repeat=4):
        for cyc, diag in _C4_STRUCTURES:
            if all(g.has_edge(tup[i], tup[j]) for i, j in cyc) and not any(
                g.has_edge(tup[i], tup[j]) for i, j in diag
            ):
                hits += 1
                break
    return Fraction(hits, g.n**4)


def test_rho_examples():
    assert rho(cycle(5)) == Fraction(2, 5)
    assert rho(named("clebsch").graph) == Fraction(5, 16)
    assert rho(path(2)) == Fraction(1, 2)


def test_c4_examples():
    assert c4_density(path(2)) == Fraction(3, 8)
    assert c4_density(path(2)) == c4_lower_trivial(Fraction(1, 2))
    assert c4_density(cycle(5)) == Fraction(18, 125)
    assert c4_density(named("petersen").graph) == Fraction(9, 200)
    assert c4_density(named("clebsch").graph) == Fraction(195, 4096)


def test_c4_fast_path_matches_brute_force():
    for g in enumerate_triangle_free(5):
        assert c4_density(g) == c4_brute(g)
    assert c4_density(cycle(5)) == c4_brute(cycle(5))
    assert c4_density(named("petersen").graph) == c4_brute(named("petersen").graph)


def test_c4_tightness_at_the_two_extremal_graphs():
    assert c4_density(named("clebsch").graph) == c4_lower_general(Fraction(5, 16))
    assert c4_density(cycle(5)) == c4_lower_no_2matching(Fraction(2, 5))


def test_c4_srg_closed_form_on_named_graphs():
    for name in ("c5", "petersen", "clebsch", "hoffman_singleton", "gewirtz", "m22", "higman_sims"):
        ng = named(name)
        n, k, _, c = ng.expected_srg
        assert c4_density(ng.graph) == Fraction(3 * (k**2 + c**2 * (n - k - 1)), n**3)


def test_blowup_invariance_of_densities():
    for g in enumerate_triangle_free(4) + [cycle(5)]:
        base_rho, base_c4 = rho(g), c4_density(g)
        for t in (2, 3):
            b = blowup(g, t)
            assert rho(b) == base_rho
            assert c4_density(b) == base_c4


def test_theorem_bounds_on_small_graphs():
    for g in enumerate_triangle_free(6):
        r, c4 = rho(g), c4_density(g)
        assert c4 >= c4_lower_general(r)
        if r < 1:
            assert c4 >= c4_lower_trivial(r)
        if not has_induced_2matching(g):
            assert c4 >= c4_lower_no_2matching(r)


def test_partition_densities_square_example():
    g = cycle(4)
    d = partition_densities(g, {"x": [0, 1], "y": [2, 3]})
    assert d.within["x"] == Fraction(1, 16)
    assert d.within["y"] == Fraction(1, 16)
    assert d.cross[("x", "y")] == Fraction(4, 16)
    assert d.p["x"] == Fraction(1, 2)


def test_partition_densities_edge_cases():
    g = cycle(5)
    full = partition_densities(g, {"x": range(5)})
    assert full.within["x"] == rho(g) / 2
    empty_part = partition_densities(g, {"x": []})
    assert empty_part.p["x"] == 0 and empty_part.within["x"] == 0
    with pytest.raises(ValueError):
        partition_densities(g, {"x": [0, 1], "y": [1, 2]})


def test_partition_sum_rule_random():
    rng = random.Random(31)
    for _ in range(25):
        n = rng.randint(3, 9)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
        g = Graph.from_edges(n, edges)
        labels = [rng.randrange(3) for _ in range(n)]
        parts = {f"p{i}": [v for v in range(n) if labels[v] == i] for i in range(3)}
        d = partition_densities(g, parts)
        total = 2 * sum(d.within.values()) + sum(d.cross.values())
        assert total == rho(g)


def test_e_rel():
    p = named("petersen").graph
    assert e_rel(p, 0) == Fraction(3, 10)
    assert e_rel(p, 0, set(range(1, 10))) == Fraction(3, 10)
    c5 = cycle(5)
    assert e_rel(c5, 0, {2, 3}) == 0
    assert e_rel(c5, 0, set()) == 0
    with pytest.raises(ValueError):
        e_rel(c5, 0, {0, 2})


def test_density_report():
    rep = density_report(cycle(5), with_alpha=True)
    assert rep.rho == Fraction(2, 5)
    assert rep.c4 == Fraction(18, 125)
    assert rep.delta == Fraction(2, 5)
    assert rep.alpha == Fraction(2, 5)
    assert 0 <= rep.rho <= 1 and 0 <= rep.c4 <= 1
    assert max_degree_rel(cycle(5)) == Fraction(2, 5)
