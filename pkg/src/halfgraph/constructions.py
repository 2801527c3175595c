"""Explicit half constructions and the exact bounds they certify.

Every constructor returns a BoundCertificate whose `bound` is beta(G, half)
recomputed from the weights, never the analytic shortcut; analytic values
ride along in `params` and are asserted against the recomputation.

Convention note: rho_x here always means |E(X)|/n^2 (within-part, no factor
2) and rho_xy means 2|E(X,Y)|/n^2, so closed forms carry an explicit factor 2
on within-part terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .density import c4_density, partition_densities, rho
from .exactmath import sparse_estimate
from .graphcore import Graph, NamedGraph, _bits, is_triangle_free
from .halves import BoundCertificate, Half, beta_of_half, certificate


class RecipeSearchError(Exception):
    """A recipe search exhausted its candidates without the stated counts."""

    def __init__(self, message, best_found=None):
        super().__init__(message)
        self.best_found = best_found


# ---------------------------------------------------------------------------
# Per-edge splits
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EdgeSplit:
    """The three-part split induced by one edge: both neighborhoods and the rest."""

    v1: int
    v2: int
    a1: tuple[int, ...]
    a2: tuple[int, ...]
    b: tuple[int, ...]
    e1: Fraction
    e2: Fraction
    p1: Fraction
    p2: Fraction


def edge_split(g: Graph, edge: tuple[int, int]) -> EdgeSplit:
    v1, v2 = edge
    if not g.has_edge(v1, v2):
        raise ValueError(f"({v1}, {v2}) is not an edge")
    if g.adj[v1] & g.adj[v2]:
        raise ValueError("common neighborhood not empty: graph has a triangle")
    n = g.n
    e1 = Fraction(g.degree(v1), n)
    e2 = Fraction(g.degree(v2), n)
    if e1 + e2 >= 1:
        raise ValueError(f"degenerate split: e1 + e2 = {e1 + e2} >= 1")
    if e1 > Fraction(1, 2) or e2 > Fraction(1, 2):
        raise ValueError("relative degree above 1/2; split weights leave [0, 1]")
    a1_mask, a2_mask = g.adj[v1], g.adj[v2]
    b_mask = ((1 << n) - 1) & ~(a1_mask | a2_mask)
    p1 = (Fraction(1, 2) - e1) / (1 - e1 - e2)
    return EdgeSplit(
        v1=v1,
        v2=v2,
        a1=tuple(_bits(a1_mask)),
        a2=tuple(_bits(a2_mask)),
        b=tuple(_bits(b_mask)),
        e1=e1,
        e2=e2,
        p1=p1,
        p2=1 - p1,
    )


def _weights(n: int, assignments: list[tuple[tuple[int, ...], Fraction]]) -> Half:
    w = [Fraction(0)] * n
    for verts, value in assignments:
        for v in verts:
            w[v] = value
    return Half(tuple(w))


def edge_halves(g: Graph, edge: tuple[int, int]) -> tuple[BoundCertificate, BoundCertificate]:
    """The two halves supported on one side of an edge split.

    Half i puts weight 1 on N(v_i), p_i on the rest, 0 on N(v_{3-i}); its
    value satisfies beta(G, mu_i) = (p_i * rho_{a_i b})/2 + p_i^2 * rho_b,
    which is asserted against the recomputed bound.
    """
    split = edge_split(g, edge)
    dens = partition_densities(g, {"a1": split.a1, "a2": split.a2, "b": split.b})
    certs = []
    for tag, own, other, p in (
        ("a1", split.a1, split.a2, split.p1),
        ("a2", split.a2, split.a1, split.p2),
    ):
        mu = _weights(g.n, [(own, Fraction(1)), (split.b, p)])
        cert = certificate(g, "edge", mu, {
            "v1": split.v1, "v2": split.v2, "side": tag,
            "e1": split.e1, "e2": split.e2, "p": p,
        })
        closed_form = p * dens.cross[tuple(sorted((tag, "b")))] / 2 + p**2 * dens.within["b"]
        assert cert.bound == closed_form, (cert.bound, closed_form)
        certs.append(cert)
    return certs[0], certs[1]


def edge_combined_bound(g: Graph, edge: tuple[int, int]) -> Fraction:
    """The averaged split bound p1*p2*(rho - rho_{a1a2})/2 for one edge."""
    split = edge_split(g, edge)
    dens = partition_densities(g, {"a1": split.a1, "a2": split.a2, "b": split.b})
    return split.p1 * split.p2 * (rho(g) - dens.cross[("a1", "a2")]) / 2


def krivelevich_bound(g: Graph) -> Fraction:
    """beta(G) <= rho/8 - C4/(12 rho), from averaging the split bound over edges."""
    r = rho(g)
    if r == 0:
        raise ValueError("edgeless graph: the averaged edge bound needs rho > 0")
    return r / 8 - c4_density(g) / (12 * r)


# ---------------------------------------------------------------------------
# Max-degree halves (the Delta >= 1/4 workhorse)
# ---------------------------------------------------------------------------


def maxdeg_halves(g: Graph) -> BoundCertificate:
    """Two halves built from a maximum-degree vertex, plus the analytic bound.

    mu0 avoids the neighborhood entirely; mu1 takes all of it.  The returned
    certificate carries the better actual half; the analytic value
    rho*(1-2*Delta)/(8*(1-Delta)^2) is asserted to dominate it.
    """
    n = g.n
    v = min(range(n), key=lambda u: (-g.degree(u), u))
    delta = Fraction(g.degree(v), n)
    if delta >= Fraction(1, 2):
        raise ValueError(f"max degree {delta} >= 1/2; half weights would exceed 1")
    hood = tuple(_bits(g.adj[v]))
    rest = tuple(u for u in range(n) if not g.adj[v] >> u & 1)
    mu0 = _weights(n, [(rest, 1 / (2 * (1 - delta)))])
    mu1 = _weights(n, [(hood, Fraction(1)), (rest, (Fraction(1, 2) - delta) / (1 - delta))])
    beta0 = beta_of_half(g, mu0)
    beta1 = beta_of_half(g, mu1)
    analytic = rho(g) * (1 - 2 * delta) / (8 * (1 - delta) ** 2)
    assert analytic >= min(beta0, beta1), (analytic, beta0, beta1)
    best = mu0 if beta0 <= beta1 else mu1
    return certificate(g, "maxdeg", best, {
        "vertex": v, "delta": delta, "analytic_bound": analytic,
        "beta_mu0": beta0, "beta_mu1": beta1,
    })


def maxdeg_combination_residual(g: Graph) -> Fraction:
    """Exact residual of the two-half combination identity (must be zero).

    (1-2D)*rhs0 + rhs1 - (1-2D)/(2(1-D)) * rho where rhs_i is the closed form
    of 2*beta(G, mu_i); zero certifies the lemma-producing combination.
    """
    n = g.n
    v = min(range(n), key=lambda u: (-g.degree(u), u))
    delta = Fraction(g.degree(v), n)
    hood = tuple(_bits(g.adj[v]))
    rest = tuple(u for u in range(n) if not g.adj[v] >> u & 1)
    dens = partition_densities(g, {"a": hood, "b": rest})
    rho_ab, rho_b = dens.cross[("a", "b")], dens.within["b"]
    q = (Fraction(1, 2) - delta) / (1 - delta)
    rhs0 = rho_b / (2 * (1 - delta) ** 2)
    rhs1 = q * rho_ab + 2 * q**2 * rho_b
    combined = (1 - 2 * delta) * rhs0 + rhs1
    # the neighborhood is independent, so rho_ab + 2*rho_b = rho
    return combined - (1 - 2 * delta) / (2 * (1 - delta)) * (rho_ab + 2 * rho_b)


# ---------------------------------------------------------------------------
# Three-half bound (the Delta <= 1/4 case)
# ---------------------------------------------------------------------------


def triple_half_bound(g: Graph) -> BoundCertificate:
    """Best of the three halves around the heaviest edge, with the analytic value.

    Picks v1 of maximum degree, v2 of maximum degree inside N(v1) (ties to
    the lowest index), builds mu0/mu1/mu2, asserts their closed
    forms, and returns the best actual half; params carry the analytic
    estimate f(rho, Delta, e2) which must dominate the best half.
    """
    n = g.n
    if not is_triangle_free(g):
        raise ValueError("construction requires a triangle-free graph")
    if g.edge_count() == 0:
        raise ValueError("graph has no edges")
    delta_abs = g.max_degree()
    delta = Fraction(delta_abs, n)
    if delta > Fraction(1, 4):
        raise ValueError(
            f"max degree {delta} > 1/4: use maxdeg_halves, which covers that case"
        )
    v1 = min(u for u in range(n) if g.degree(u) == delta_abs)
    v2 = min(
        (u for u in _bits(g.adj[v1])),
        key=lambda u: (-g.degree(u), u),
    )
    split = edge_split(g, (v1, v2))
    dens = partition_densities(g, {"a1": split.a1, "a2": split.a2, "b": split.b})
    rho_a1a2 = dens.cross[("a1", "a2")]
    rho_a1b = dens.cross[("a1", "b")]
    rho_a2b = dens.cross[("a2", "b")]
    rho_b = dens.within["b"]

    p0 = (Fraction(1, 2) - split.e1 - split.e2) / (1 - split.e1 - split.e2)
    mu0 = _weights(n, [(split.a1, Fraction(1)), (split.a2, Fraction(1)), (split.b, p0)])
    mu1 = _weights(n, [(split.a1, Fraction(1)), (split.b, split.p1)])
    mu2 = _weights(n, [(split.a2, Fraction(1)), (split.b, split.p2)])

    values = [beta_of_half(g, mu) for mu in (mu0, mu1, mu2)]
    closed_forms = [
        (rho_a1a2 + p0 * (rho_a1b + rho_a2b) + 2 * p0**2 * rho_b) / 2,
        (split.p1 * rho_a1b + 2 * split.p1**2 * rho_b) / 2,
        (split.p2 * rho_a2b + 2 * split.p2**2 * rho_b) / 2,
    ]
    assert values == closed_forms, (values, closed_forms)

    analytic = sparse_estimate().eval({"rho": rho(g), "delta": delta, "e2": split.e2})
    assert analytic >= min(values), (analytic, values)
    best_idx = min(range(3), key=lambda i: (values[i], i))
    best = (mu0, mu1, mu2)[best_idx]
    return certificate(g, "triple", best, {
        "v1": v1, "v2": v2, "delta": delta, "e2": split.e2, "p0": p0,
        "analytic_bound": analytic, "chosen": f"mu{best_idx}",
    })


# ---------------------------------------------------------------------------
# Recipe halves on the named strongly regular graphs
# ---------------------------------------------------------------------------


def _expect_named(ng: NamedGraph, name: str) -> Graph:
    if not isinstance(ng, NamedGraph) or ng.name != name:
        raise ValueError(f"this recipe applies to the {name} graph only")
    return ng.graph


def clebsch_recipe_half(ng: NamedGraph, edge: tuple[int, int] | None = None) -> BoundCertificate:
    """Union of the two endpoints' neighborhoods, minus the endpoints.

    Disjoint neighborhoods force exactly 8 = n/2 vertices; the certificate
    records the induced edge count (at most 5, i.e. beta <= 1/50).
    """
    g = _expect_named(ng, "clebsch")
    u, v = edge if edge is not None else g.edges()[0]
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    mask = (g.adj[u] | g.adj[v]) & ~(1 << u) & ~(1 << v)
    if mask.bit_count() != g.n // 2:
        raise RecipeSearchError(f"neighborhood union has {mask.bit_count()} vertices, wanted 8")
    induced = sum((g.adj[w] & mask).bit_count() for w in _bits(mask)) // 2
    cert = certificate(g, "clebsch-recipe", Half.from_mask(g.n, mask),
                       {"edge": (u, v), "induced_edges": induced})
    assert cert.bound == Fraction(induced, g.n**2)
    return cert


def gewirtz_recipe_half(ng: NamedGraph) -> BoundCertificate:
    """First induced 2-matching whose neighborhood union spans exactly 51 edges.

    The union of the four neighborhoods minus the four roots always has 28 =
    n/2 vertices; root tuples are scanned in index order until the stated
    edge count appears.
    """
    g = _expect_named(ng, "gewirtz")
    edges = g.edges()
    target_edges = 51
    best = None
    for i, (a, b) in enumerate(edges):
        span_ab = g.adj[a] | g.adj[b]
        for c, d in edges[i + 1 :]:
            if c in (a, b) or d in (a, b):
                continue
            if span_ab >> c & 1 or span_ab >> d & 1:
                continue
            mask = (span_ab | g.adj[c] | g.adj[d]) & ~((1 << a) | (1 << b) | (1 << c) | (1 << d))
            size = mask.bit_count()
            if size != g.n // 2:
                raise RecipeSearchError(
                    f"union of neighborhoods has {size} vertices, wanted {g.n // 2}"
                )
            induced = sum((g.adj[w] & mask).bit_count() for w in _bits(mask)) // 2
            if best is None or abs(induced - target_edges) < abs(best[0] - target_edges):
                best = (induced, (a, b, c, d))
            if induced == target_edges:
                cert = certificate(g, "gewirtz-recipe", Half.from_mask(g.n, mask),
                                   {"roots": (a, b, c, d), "induced_edges": induced})
                assert cert.bound == Fraction(induced, g.n**2)
                return cert
    raise RecipeSearchError(
        f"no induced 2-matching spans {target_edges} edges", best_found=best
    )


def m22_recipe_half(ng: NamedGraph) -> BoundCertificate:
    """Three-root neighborhood union with |A|=38, |E(A)|=109, plus half a vertex.

    Roots are an edge (u1, u2) and a third vertex u3 outside both
    neighborhoods; the half adds weight 1/2 at a vertex with exactly 9
    neighbors in A, certifying (109 + 9/2)/77^2 < 0.0192.
    """
    g = _expect_named(ng, "m22")
    full = (1 << g.n) - 1
    best = None
    for u1, u2 in g.edges():
        both = g.adj[u1] | g.adj[u2]
        outside = full & ~both & ~(1 << u1) & ~(1 << u2)
        for u3 in _bits(outside):
            mask = (both | g.adj[u3]) & ~((1 << u1) | (1 << u2) | (1 << u3))
            size = mask.bit_count()
            if size != 38:
                raise RecipeSearchError(f"|A| = {size}, expected 38")
            induced = sum((g.adj[w] & mask).bit_count() for w in _bits(mask)) // 2
            if best is None or abs(induced - 109) < abs(best[0] - 109):
                best = (induced, (u1, u2, u3))
            if induced != 109:
                continue
            for v in range(g.n):
                if mask >> v & 1:
                    continue
                if (g.adj[v] & mask).bit_count() == 9:
                    cert = certificate(
                        g, "m22-recipe", Half.from_mask(g.n, mask, half_vertex=v),
                        {"roots": (u1, u2, u3), "pivot": v,
                         "set_size": size, "induced_edges": induced},
                    )
                    assert cert.bound == Fraction(2 * induced + 9, 2 * g.n**2)
                    return cert
    raise RecipeSearchError(
        "no root triple reached |E(A)| = 109 with a 9-neighbor pivot", best_found=best
    )
