"""Flag-style densities: rho, the 4-cycle density, partition densities.

Densities follow blow-up semantics: vertices are sampled independently with
repetition, so degenerate tuples (repeated vertices realizing paths or single
edges) contribute to the 4-cycle density.  All values are exact Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphcore import Graph, _bits, independence_number


def rho(g: Graph) -> Fraction:
    """Edge density 2|E| / n^2."""
    return Fraction(2 * g.edge_count(), g.n * g.n)


def max_degree_rel(g: Graph) -> Fraction:
    """Maximum relative degree max_v |N(v)|/n."""
    return Fraction(g.max_degree(), g.n)


def c4_density(g: Graph) -> Fraction:
    """Probability that four independently sampled vertices induce a 4-cycle.

    Counted per labeled cycle structure: a tuple (v1, v2, v3, v4) realizes the
    cycle 1-2-3-4-1 iff the four cycle pairs are edges and both diagonals are
    non-edges; the two other structures contribute symmetrically (factor 3).
    The loop runs over ordered edges (v1, v2) and neighbors w1 of v1, counting
    the admissible w2 by one mask intersection, so the cost is O(sum deg^2)
    words instead of n^4 tuples.
    """
    n, adj = g.n, g.adj
    count = 0
    for v1 in range(n):
        row1 = adj[v1]
        for v2 in _bits(row1):
            row2 = adj[v2]
            allowed = row2 & ~row1  # w2 ~ v2 and not ~ v1
            for w1 in _bits(row1):
                if row2 >> w1 & 1:
                    continue  # w1 must not neighbor v2
                count += (adj[w1] & allowed).bit_count()
    return Fraction(3 * count, n**4)


def c4_lower_trivial(edge_density: Fraction) -> Fraction:
    """3*rho^4/(1-rho), the quasi-randomness floor for triangle-free graphs."""
    return 3 * edge_density**4 / (1 - edge_density)


def c4_lower_general(edge_density: Fraction) -> Fraction:
    """(3/2)*rho^2 - (81/256)*rho; tight on the Clebsch graph."""
    return Fraction(3, 2) * edge_density**2 - Fraction(81, 256) * edge_density


def c4_lower_no_2matching(edge_density: Fraction) -> Fraction:
    """(3/2)*rho^2 - (6/25)*rho; tight on the 5-cycle."""
    return Fraction(3, 2) * edge_density**2 - Fraction(6, 25) * edge_density


@dataclass(frozen=True)
class PartitionDensities:
    """Exact densities of a family of disjoint vertex sets.

    `p` holds |X|/n, `within` holds |E(X)|/n^2 (no factor 2), and `cross`
    holds 2|E(X,Y)|/n^2 keyed by the sorted name pair; the asymmetric
    normalization is deliberate and matches the sum rule
    2*sum(within) + sum(cross) + (terms outside the parts) = rho.
    """

    p: dict[str, Fraction]
    within: dict[str, Fraction]
    cross: dict[tuple[str, str], Fraction]


def partition_densities(g: Graph, parts: dict[str, set | list | tuple]) -> PartitionDensities:
    """Compute p_x, rho_x and rho_xy for pairwise disjoint vertex sets."""
    masks: dict[str, int] = {}
    seen = 0
    for name, verts in parts.items():
        mask = 0
        for v in verts:
            mask |= 1 << v
        if mask & seen:
            raise ValueError(f"part {name!r} overlaps an earlier part")
        if mask >> g.n:
            raise ValueError(f"part {name!r} references vertices >= n")
        seen |= mask
        masks[name] = mask
    nsq = g.n * g.n
    p = {name: Fraction(mask.bit_count(), g.n) for name, mask in masks.items()}
    within = {}
    for name, mask in masks.items():
        inner = sum((g.adj[v] & mask).bit_count() for v in _bits(mask)) // 2
        within[name] = Fraction(inner, nsq)
    cross = {}
    names = sorted(masks)
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            between = sum((g.adj[v] & masks[b]).bit_count() for v in _bits(masks[a]))
            cross[(a, b)] = Fraction(2 * between, nsq)
    return PartitionDensities(p=p, within=within, cross=cross)


def e_rel(g: Graph, v: int, subset=None) -> Fraction:
    """Relative degree |N(v) cap X|/n, or |N(v)|/n when X is omitted."""
    if subset is None:
        return Fraction(g.degree(v), g.n)
    mask = 0
    for u in subset:
        mask |= 1 << u
    if mask >> v & 1:
        raise ValueError(f"vertex {v} lies in the reference set")
    return Fraction((g.adj[v] & mask).bit_count(), g.n)


@dataclass(frozen=True)
class DensityReport:
    rho: Fraction
    c4: Fraction
    delta: Fraction
    alpha: Fraction | None = None


def density_report(g: Graph, with_alpha: bool = False) -> DensityReport:
    alpha = Fraction(independence_number(g)[0], g.n) if with_alpha else None
    return DensityReport(rho=rho(g), c4=c4_density(g), delta=max_degree_rel(g), alpha=alpha)
