"""Halves, exact minimum half-weight beta, and local search for good halves.

A half assigns each vertex a weight in [0,1] with total n/2; beta(G, mu) is
the normalized weighted edge mass (1/n^2) * sum_{(u,v) in E} mu(u)mu(v).  For
even n the minimum is attained on 0-1 halves, for odd n on halves with a
single weight 1/2, so the exact search only visits those.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .graphcore import Graph, _bits


class ResourceLimitError(Exception):
    """An exact search exceeded its configured budget (never approximated)."""


class HalfError(ValueError):
    """Invalid weight vector for the given graph."""


@dataclass(frozen=True)
class Half:
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(Fraction(w) for w in self.weights))

    @classmethod
    def from_mask(cls, n: int, mask: int, half_vertex: int | None = None) -> "Half":
        w = [Fraction(mask >> v & 1) for v in range(n)]
        if half_vertex is not None:
            if mask >> half_vertex & 1:
                raise HalfError("half-weight vertex already carries weight 1")
            w[half_vertex] = Fraction(1, 2)
        return cls(tuple(w))

    def support(self) -> tuple[int, ...]:
        return tuple(v for v, w in enumerate(self.weights) if w)


def validate_half(g: Graph, mu: Half) -> None:
    if len(mu.weights) != g.n:
        raise HalfError(f"half has {len(mu.weights)} weights for {g.n} vertices")
    if any(w < 0 or w > 1 for w in mu.weights):
        raise HalfError("weights must lie in [0, 1]")
    total = sum(mu.weights)
    if 2 * total != g.n:
        raise HalfError(f"weights sum to {total}, expected {Fraction(g.n, 2)}")


def beta_of_half(g: Graph, mu: Half) -> Fraction:
    """Exact (1/n^2) * sum over edges of mu(u)*mu(v)."""
    validate_half(g, mu)
    w = mu.weights
    total = Fraction(0)
    for u, v in g.edges():
        if w[u] and w[v]:
            total += w[u] * w[v]
    return total / g.n**2


@dataclass
class BoundCertificate:
    """A proved upper bound on beta(G) plus the witness that certifies it.

    When `half` is present, `bound` is beta(G, half) recomputed from scratch;
    method-specific exact scalars (analytic bounds, split data) ride along in
    `params`.
    """

    method: str
    bound: Fraction
    half: Half | None = None
    params: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {"method": self.method, "bound": str(self.bound)}
        if self.half is not None:
            out["half"] = [str(w) for w in self.half.weights]
        if self.params:
            out["params"] = {k: str(v) for k, v in self.params.items()}
        return out


def certificate(g: Graph, method: str, half: Half, params: dict | None = None) -> BoundCertificate:
    """Build a certificate whose bound is the independently recomputed beta."""
    return BoundCertificate(method=method, bound=beta_of_half(g, half), half=half,
                            params=dict(params or {}))


# ---------------------------------------------------------------------------
# Exact minimum over halves
# ---------------------------------------------------------------------------


def _subset_edges(adj, mask) -> int:
    total = 0
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        total += (adj[v] & mask).bit_count()
    return total // 2


def _beta_scan(g: Graph):
    n, adj = g.n, g.adj
    half_size = n // 2
    best = None
    for subset in combinations(range(n), half_size):
        mask = 0
        for v in subset:
            mask |= 1 << v
        doubled = 2 * _subset_edges(adj, mask)
        if n % 2:
            extra = min((adj[v] & mask).bit_count() for v in range(n) if not mask >> v & 1)
            doubled += extra
        if best is None or doubled < best[0]:
            best = (doubled, mask)
            if doubled == 0:
                break
    doubled, mask = best
    half_vertex = None
    if n % 2:
        target = doubled - 2 * _subset_edges(adj, mask)
        half_vertex = min(
            v for v in range(n)
            if not mask >> v & 1 and (adj[v] & mask).bit_count() == target
        )
    return Fraction(doubled, 2 * n * n), Half.from_mask(n, mask, half_vertex)


def _beta_branch_bound(g: Graph, max_nodes: int):
    n, adj = g.n, g.adj
    half_size = n // 2
    odd = n % 2
    order = sorted(range(n), key=lambda v: -adj[v].bit_count())

    # incumbent: the half made of the lowest-degree vertices
    mask = 0
    for v in sorted(range(n), key=lambda u: adj[u].bit_count())[:half_size]:
        mask |= 1 << v
    best_doubled = 2 * _subset_edges(adj, mask)
    if odd:
        best_doubled += min((adj[v] & mask).bit_count() for v in range(n) if not mask >> v & 1)
    best_mask = mask

    nodes = 0

    def completion_bound(mask, size, index) -> int:
        need = half_size - size
        if need == 0:
            return 0
        gains = sorted((adj[order[i]] & mask).bit_count() for i in range(index, n))
        return sum(gains[:need])

    def walk(index: int, mask: int, size: int, edges: int):
        nonlocal nodes, best_doubled, best_mask
        nodes += 1
        if nodes > max_nodes:
            raise ResourceLimitError(
                f"branch-and-bound exceeded {max_nodes} nodes; raise max_nodes to continue"
            )
        if size == half_size:
            doubled = 2 * edges
            if odd:
                doubled += min(
                    (adj[v] & mask).bit_count() for v in range(n) if not mask >> v & 1
                )
            if doubled < best_doubled:
                best_doubled, best_mask = doubled, mask
            return
        if index == n or n - index < half_size - size:
            return
        if 2 * (edges + completion_bound(mask, size, index)) >= best_doubled:
            return
        v = order[index]
        walk(index + 1, mask | (1 << v), size + 1, edges + (adj[v] & mask).bit_count())
        walk(index + 1, mask, size, edges)

    walk(0, 0, 0, 0)
    half_vertex = None
    if odd:
        target = best_doubled - 2 * _subset_edges(adj, best_mask)
        half_vertex = min(
            v for v in range(n)
            if not best_mask >> v & 1 and (adj[v] & best_mask).bit_count() == target
        )
    return Fraction(best_doubled, 2 * n * n), Half.from_mask(n, best_mask, half_vertex)


def beta_exact(g: Graph, method: str = "auto", scan_limit: int = 20, bnb_limit: int = 36,
               max_nodes: int = 20_000_000):
    """Exact beta(G) with a 0-1 (even n) or almost-0-1 (odd n) witness half.

    `method` may force "scan" or "branch-bound"; in "auto" mode graphs up to
    `scan_limit` vertices are scanned exhaustively and graphs up to
    `bnb_limit` go through branch-and-bound.  Larger inputs raise
    ResourceLimitError rather than approximating.
    """
    if method == "scan":
        return _beta_scan(g)
    if method == "branch-bound":
        return _beta_branch_bound(g, max_nodes)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    if g.n <= scan_limit:
        return _beta_scan(g)
    if g.n <= bnb_limit:
        return _beta_branch_bound(g, max_nodes)
    raise ResourceLimitError(
        f"n={g.n} exceeds the exact-search budget (bnb_limit={bnb_limit})"
    )


# ---------------------------------------------------------------------------
# Local search on large graphs
# ---------------------------------------------------------------------------


def _steepest_descent(adj, n, mask: int):
    """Swap one in-vertex for one out-vertex while that strictly reduces edges.

    Ties break at the lexicographically smallest (in-vertex, out-vertex) pair.
    Returns (induced edge count, final mask).
    """
    deg_in = [(adj[v] & mask).bit_count() for v in range(n)]
    edges = sum(deg_in[v] for v in _bits(mask)) // 2
    inside = sorted(_bits(mask))
    outside = sorted(v for v in range(n) if not mask >> v & 1)
    while True:
        best_delta, best_pair = 0, None
        for u in inside:
            du = deg_in[u]
            for w in outside:
                delta = deg_in[w] - (adj[u] >> w & 1) - du
                if delta < best_delta:
                    best_delta, best_pair = delta, (u, w)
        if best_pair is None:
            return edges, mask
        u, w = best_pair
        mask = (mask & ~(1 << u)) | (1 << w)
        edges += best_delta
        for x in _bits(adj[u]):
            deg_in[x] -= 1
        for x in _bits(adj[w]):
            deg_in[x] += 1
        inside[inside.index(u)] = w
        outside[outside.index(w)] = u
        inside.sort()
        outside.sort()


def local_search_half(g: Graph, seed: int = 1, restarts: int = 20) -> BoundCertificate:
    """Randomly restarted steepest-descent search for a sparse 0-1 half.

    Deterministic for a given (seed, restarts): restart r draws its start
    from random.Random(f"{seed}:{r}").  Returns the best certificate seen.
    """
    if g.n % 2:
        raise ValueError("local search needs even n; blow the graph up by 2 first")
    half_size = g.n // 2
    best = None
    for r in range(restarts):
        rng = random.Random(f"{seed}:{r}")
        start_vertices = rng.sample(range(g.n), half_size)
        mask = 0
        for v in start_vertices:
            mask |= 1 << v
        edges, final_mask = _steepest_descent(g.adj, g.n, mask)
        if best is None or edges < best[0]:
            best = (edges, final_mask, r)
        if edges == 0:
            break
    edges, mask, found_at = best
    half = Half.from_mask(g.n, mask)
    cert = certificate(g, "local-search", half,
                       {"seed": seed, "restarts": restarts, "found_at_restart": found_at,
                        "induced_edges": edges})
    assert cert.bound == Fraction(edges, g.n**2)
    return cert
