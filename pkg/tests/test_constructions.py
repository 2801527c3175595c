"""Tests for the half constructions and their exact certificates."""

from fractions import Fraction

import pytest

from halfgraph.constructions import (
    clebsch_recipe_half,
    edge_combined_bound,
    edge_halves,
    edge_split,
    gewirtz_recipe_half,
    krivelevich_bound,
    m22_recipe_half,
    maxdeg_combination_residual,
    maxdeg_halves,
    triple_half_bound,
)
from halfgraph.density import c4_density, partition_densities, rho
from halfgraph.graphcore import (
    Graph,
    cycle,
    empty,
    enumerate_triangle_free,
    named,
)
from halfgraph.halves import beta_exact, beta_of_half


def eligible_edges(g):
    """Edges whose split produces valid halves (both weights in [0, 1])."""
    out = []
    for u, v in g.edges():
        e1 = Fraction(g.degree(u), g.n)
        e2 = Fraction(g.degree(v), g.n)
        if e1 <= Fraction(1, 2) and e2 <= Fraction(1, 2) and e1 + e2 < 1:
            out.append((u, v))
    return out


# ---------------------------------------------------------------------------
# Edge splits
# ---------------------------------------------------------------------------


def test_edge_split_pentagon():
    g = cycle(5)
    s = edge_split(g, (0, 1))
    assert set(s.a1) == {1, 4} and set(s.a2) == {0, 2} and set(s.b) == {3}
    assert s.p1 == s.p2 == Fraction(1, 2)


def test_edge_split_errors():
    g = cycle(5)
    with pytest.raises(ValueError):
        edge_split(g, (0, 2))  # not an edge
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    with pytest.raises(ValueError):
        edge_split(star, (0, 1))  # e1 + e2 = 1: degenerate


def test_edge_halves_petersen():
    g = named("petersen").graph
    c1, c2 = edge_halves(g, g.edges()[0])
    assert c1.params["p"] == Fraction(1, 2)
    assert c1.bound == beta_of_half(g, c1.half)
    assert c2.bound == beta_of_half(g, c2.half)


def test_edge_halves_star_with_slack_is_consistent():
    # a star plus isolated vertices keeps e1 + e2 < 1 and exercises the
    # degenerate weights p in {0, 1}
    g = Graph.from_edges(6, [(0, 1), (0, 2), (0, 3)])
    c1, c2 = edge_halves(g, (0, 1))
    assert c1.bound == beta_of_half(g, c1.half)
    assert c2.bound == beta_of_half(g, c2.half)


def test_split_combination_identity_on_small_graphs():
    # p2 * 2*beta(mu1) + p1 * 2*beta(mu2) == p1*p2*(rho - rho_{a1a2}), exactly
    for n in range(2, 8):
        for g in enumerate_triangle_free(n)[::3]:
            for edge in eligible_edges(g):
                s = edge_split(g, edge)
                c1, c2 = edge_halves(g, edge)
                dens = partition_densities(g, {"a1": s.a1, "a2": s.a2, "b": s.b})
                lhs = s.p2 * 2 * c1.bound + s.p1 * 2 * c2.bound
                rhs = s.p1 * s.p2 * (rho(g) - dens.cross[("a1", "a2")])
                assert lhs == rhs


def test_clebsch_split_bound_is_27_over_1024_on_every_edge():
    g = named("clebsch").graph
    bounds = {edge_combined_bound(g, e) for e in g.edges()}
    assert bounds == {Fraction(27, 1024)}


# ---------------------------------------------------------------------------
# Averaged bound
# ---------------------------------------------------------------------------


def test_krivelevich_values():
    assert krivelevich_bound(named("petersen").graph) == Fraction(1, 40)
    assert krivelevich_bound(cycle(5)) == Fraction(1, 50)
    cl = named("clebsch").graph
    value = rho(cl) / 8 - c4_density(cl) / (12 * rho(cl))
    assert krivelevich_bound(cl) == value
    assert value >= min(edge_combined_bound(cl, e) for e in cl.edges())


def test_krivelevich_rejects_edgeless():
    with pytest.raises(ValueError):
        krivelevich_bound(empty(4))


def test_averaged_bound_dominates_beta_on_small_graphs():
    for n in range(2, 8):
        for g in enumerate_triangle_free(n):
            if g.edge_count() == 0:
                continue
            assert beta_exact(g)[0] <= krivelevich_bound(g)


# ---------------------------------------------------------------------------
# Max-degree halves
# ---------------------------------------------------------------------------


def test_maxdeg_values():
    md = maxdeg_halves(named("petersen").graph)
    assert md.params["analytic_bound"] == Fraction(3, 98)
    assert md.bound == beta_of_half(named("petersen").graph, md.half)
    assert maxdeg_halves(named("clebsch").graph).params["analytic_bound"] == Fraction(15, 484)
    matching = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert maxdeg_halves(matching).params["analytic_bound"] == Fraction(1, 36)


def test_maxdeg_rejects_high_degree():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    with pytest.raises(ValueError):
        maxdeg_halves(star)


def test_maxdeg_combination_identity():
    for n in range(2, 8):
        for g in enumerate_triangle_free(n):
            if g.edge_count() and Fraction(g.max_degree(), g.n) < Fraction(1, 2):
                assert maxdeg_combination_residual(g) == 0


# ---------------------------------------------------------------------------
# Three-half bound
# ---------------------------------------------------------------------------


def test_triple_case_split_errors():
    with pytest.raises(ValueError):
        triple_half_bound(named("petersen").graph)  # Delta = 3/10 > 1/4
    with pytest.raises(ValueError):
        triple_half_bound(cycle(6))  # Delta = 1/3 > 1/4
    with pytest.raises(ValueError):
        triple_half_bound(empty(4))


def test_triple_bound_on_long_cycle():
    cert = triple_half_bound(cycle(10))
    assert cert.bound == beta_of_half(cycle(10), cert.half)
    assert cert.params["analytic_bound"] >= cert.bound
    assert cert.params["analytic_bound"] >= beta_exact(cycle(10))[0]


def test_triple_bound_on_perfect_matching():
    g = Graph.from_edges(8, [(0, 1), (2, 3), (4, 5), (6, 7)])
    cert = triple_half_bound(g)
    assert cert.bound == beta_of_half(g, cert.half)
    assert cert.params["analytic_bound"] >= cert.bound


def test_triple_bound_on_all_low_degree_small_graphs():
    for n in range(2, 8):
        for g in enumerate_triangle_free(n):
            if g.edge_count() == 0 or Fraction(g.max_degree(), g.n) > Fraction(1, 4):
                continue
            cert = triple_half_bound(g)  # internal identity asserts must hold
            assert cert.params["analytic_bound"] >= beta_exact(g)[0]


# ---------------------------------------------------------------------------
# Recipe halves
# ---------------------------------------------------------------------------


def test_clebsch_recipe():
    ng = named("clebsch")
    cert = clebsch_recipe_half(ng)
    assert len(cert.half.support()) == 8
    assert cert.params["induced_edges"] <= 5
    assert cert.bound <= Fraction(1, 50)


def test_clebsch_recipe_all_edges_equal():
    ng = named("clebsch")
    counts = {clebsch_recipe_half(ng, e).params["induced_edges"] for e in ng.graph.edges()}
    assert len(counts) == 1
    assert counts.pop() <= 5


def test_clebsch_recipe_rejects_other_graphs():
    with pytest.raises(ValueError):
        clebsch_recipe_half(named("petersen"))


def test_gewirtz_recipe():
    cert = gewirtz_recipe_half(named("gewirtz"))
    assert cert.params["induced_edges"] == 51
    assert len(cert.half.support()) == 28
    assert cert.bound == Fraction(51, 3136)
    assert cert.bound <= Fraction(17, 1000)


def test_m22_recipe():
    cert = m22_recipe_half(named("m22"))
    assert cert.params["set_size"] == 38
    assert cert.params["induced_edges"] == 109
    assert cert.bound == Fraction(227, 11858)  # (109 + 9/2)/77^2
    assert cert.bound < Fraction(192, 10000)
