"""Tests for the graph layer: predicates, codec, enumeration, named graphs."""

import random
from fractions import Fraction
from itertools import combinations
from math import inf

import pytest

from halfgraph.graphcore import (
    Graph,
    Graph6Error,
    IntegrityError,
    NAMED_GRAPH_NAMES,
    blowup,
    canonical_key,
    clebsch,
    complete_bipartite,
    count_edge_rooted_flags4,
    cycle,
    enumerate_triangle_free,
    girth,
    has_induced_2matching,
    independence_number,
    is_triangle_free,
    load_graph6,
    named,
    path,
    petersen,
    save_graph6,
    srg_parameters,
)


def rand_graph(rng, n, p=0.4):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def brute_alpha(g):
    best = 0
    for size in range(g.n, 0, -1):
        for subset in combinations(range(g.n), size):
            if all(not g.has_edge(u, v) for u, v in combinations(subset, 2)):
                return size
    return best


# ---------------------------------------------------------------------------
# Graph basics
# ---------------------------------------------------------------------------


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0b00])  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, [0b1])  # loop
    with pytest.raises(ValueError):
        Graph(0, [])


def test_subgraph_relabels():
    g = cycle(5)
    sub = g.subgraph([0, 1, 3])
    assert sub.n == 3 and sub.edge_count() == 1  # only edge (0,1) survives


def test_triangle_free_basics():
    assert is_triangle_free(cycle(5))
    assert not is_triangle_free(cycle(3))
    assert is_triangle_free(petersen())


def test_triangle_free_matches_brute_force():
    rng = random.Random(2)
    for _ in range(40):
        g = rand_graph(rng, rng.randint(3, 8))
        brute = any(
            g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
            for a, b, c in combinations(range(g.n), 3)
        )
        assert is_triangle_free(g) == (not brute)


def test_girth():
    assert girth(petersen()) == 5
    assert girth(cycle(6)) == 6
    assert girth(path(4)) == inf
    assert girth(cycle(4)) == 4
    assert girth(complete_bipartite(2, 3)) == 4


def test_independence_number_named():
    assert independence_number(petersen())[0] == 4
    assert independence_number(cycle(5))[0] == 2
    size, witness = independence_number(clebsch())
    assert size == 5
    g = clebsch()
    assert all(not g.has_edge(u, v) for u, v in combinations(witness, 2))
    assert len(witness) == 5


def test_independence_number_matches_brute_force():
    rng = random.Random(17)
    for _ in range(30):
        g = rand_graph(rng, rng.randint(2, 9))
        size, witness = independence_number(g)
        assert size == brute_alpha(g)
        assert all(not g.has_edge(u, v) for u, v in combinations(witness, 2))
        assert len(witness) == size


def test_induced_2matching():
    assert not has_induced_2matching(cycle(5))
    assert has_induced_2matching(cycle(6))
    assert not has_induced_2matching(path(2))
    assert not has_induced_2matching(complete_bipartite(2, 2))
    assert has_induced_2matching(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_blowup():
    assert canonical_key(blowup(path(2), 2)) == canonical_key(cycle(4))
    g = petersen()
    assert blowup(g, 1) == g
    b = blowup(cycle(5), 2)
    assert b.n == 10 and b.edge_count() == 20
    assert is_triangle_free(b)


# ---------------------------------------------------------------------------
# Canonical keys and enumeration
# ---------------------------------------------------------------------------


def test_canonical_key_is_isomorphism_invariant():
    rng = random.Random(23)
    for _ in range(40):
        n = rng.randint(2, 8)
        g = rand_graph(rng, n)
        perm = list(range(n))
        rng.shuffle(perm)
        relabeled = Graph.from_edges(n, [(perm[u], perm[v]) for u, v in g.edges()])
        assert canonical_key(g) == canonical_key(relabeled)


def test_canonical_key_separates_same_degree_sequence():
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert canonical_key(cycle(6)) != canonical_key(two_triangles)
    c5c3 = Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 6), (6, 7), (5, 7)])
    assert canonical_key(cycle(8)) != canonical_key(c5c3)


def test_enumeration_counts():
    expected = {1: 1, 2: 2, 3: 3, 4: 7, 5: 14, 6: 38, 7: 107, 8: 410}
    for n, count in expected.items():
        assert len(enumerate_triangle_free(n)) == count


def test_enumeration_counts_cross_checked_with_atlas():
    nx = pytest.importorskip("networkx")
    atlas = nx.graph_atlas_g()
    for n in (5, 6, 7):
        reference = sum(
            1
            for g in atlas
            if g.number_of_nodes() == n and not any(nx.triangles(g).values())
        )
        assert reference == len(enumerate_triangle_free(n))


def test_enumeration_matches_brute_force_small():
    for n in range(1, 6):
        keys = set()
        pairs = list(combinations(range(n), 2))
        for pick in range(1 << len(pairs)):
            g = Graph.from_edges(n, [e for i, e in enumerate(pairs) if pick >> i & 1])
            if is_triangle_free(g):
                keys.add(canonical_key(g))
        assert len(keys) == len(enumerate_triangle_free(n))


def test_enumerated_graphs_are_valid_and_distinct():
    graphs = enumerate_triangle_free(6)
    keys = {canonical_key(g) for g in graphs}
    assert len(keys) == len(graphs)
    assert all(is_triangle_free(g) and g.n == 6 for g in graphs)


def test_density_degree_alpha_chain():
    # rho <= max-degree/n <= alpha/n for triangle-free graphs
    for g in enumerate_triangle_free(6):
        rho = Fraction(2 * g.edge_count(), g.n**2)
        delta = Fraction(g.max_degree(), g.n)
        alpha = Fraction(independence_number(g)[0], g.n)
        assert rho <= delta
        if g.edge_count():
            assert delta <= alpha


def test_edge_rooted_flag_count():
    assert count_edge_rooted_flags4() == 10


def test_edge_rooted_flags_quotient_upper_bound():
    # collapsing the root labels can only merge classes
    optional = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    classes = set()
    for pick in range(1 << len(optional)):
        edges = [(0, 1)] + [e for i, e in enumerate(optional) if pick >> i & 1]
        g = Graph.from_edges(4, edges)
        if is_triangle_free(g):
            classes.add(canonical_key(g))
    assert len(classes) <= 10


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


def test_graph6_roundtrip_random():
    rng = random.Random(5)
    for _ in range(40):
        g = rand_graph(rng, rng.randint(1, 40))
        assert load_graph6(save_graph6(g)) == g


def test_graph6_roundtrip_long_form():
    rng = random.Random(6)
    g = rand_graph(rng, 70, p=0.1)
    encoded = save_graph6(g)
    assert encoded.startswith("~")
    assert load_graph6(encoded) == g


def test_graph6_petersen_line():
    line = save_graph6(petersen())
    g = load_graph6(line)
    assert g.n == 10 and g.edge_count() == 15
    assert canonical_key(g) == canonical_key(petersen())


def test_graph6_cross_checked_with_networkx():
    nx = pytest.importorskip("networkx")
    rng = random.Random(9)
    for _ in range(10):
        g = rand_graph(rng, rng.randint(2, 30))
        theirs = nx.from_graph6_bytes(save_graph6(g).encode())
        assert theirs.number_of_nodes() == g.n
        assert sorted(map(tuple, map(sorted, theirs.edges()))) == g.edges()
        back = nx.to_graph6_bytes(theirs, header=False).strip()
        assert load_graph6(back) == g


def test_graph6_header_and_errors():
    g = cycle(5)
    assert load_graph6(">>graph6<<" + save_graph6(g)) == g
    with pytest.raises(Graph6Error):
        load_graph6("")
    with pytest.raises(Graph6Error) as err:
        load_graph6("I?LR")  # truncated Petersen-sized record
    assert err.value.offset == 4
    with pytest.raises(Graph6Error):
        load_graph6(bytes([30, 70]))


# ---------------------------------------------------------------------------
# Named graphs
# ---------------------------------------------------------------------------


def test_named_graphs_all_validate():
    expected = {
        "c5": (5, 2, 0, 1),
        "petersen": (10, 3, 0, 1),
        "clebsch": (16, 5, 0, 2),
        "hoffman_singleton": (50, 7, 0, 1),
        "gewirtz": (56, 10, 0, 2),
        "m22": (77, 16, 0, 4),
        "higman_sims": (100, 22, 0, 6),
    }
    assert set(NAMED_GRAPH_NAMES) == set(expected)
    for name, params in expected.items():
        ng = named(name)
        assert ng.expected_srg == params
        assert srg_parameters(ng.graph) == params
        assert is_triangle_free(ng.graph)


def test_named_examples():
    assert named("clebsch").graph.edge_count() == 40
    assert named("petersen").graph.edge_count() == 15
    assert named("higman_sims").graph.edge_count() == 1100


def test_named_unknown():
    with pytest.raises(ValueError):
        named("heawood")


def test_srg_parameters_rejects_non_srg():
    with pytest.raises(IntegrityError):
        srg_parameters(path(4))  # not regular
    with pytest.raises(IntegrityError):
        srg_parameters(cycle(6))  # regular but mu not constant


def test_mu_validation_is_exhaustive():
    # damage one edge pair of the Clebsch graph; some non-adjacent pair must
    # then see a wrong common-neighbour count
    g = clebsch()
    u, v = g.edges()[0]
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    broken = Graph(g.n, rows)
    with pytest.raises(IntegrityError):
        srg_parameters(broken)
