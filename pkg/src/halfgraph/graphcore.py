"""Graphs as adjacency bit-rows: predicates, graph6 I/O, enumeration, named graphs.

Neighborhoods are Python ints used as bitsets, so intersection tests are
single word operations; that is what keeps the subset searches over the
16..100-vertex named graphs cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import inf


class IntegrityError(Exception):
    """Embedded or constructed graph data failed its validation."""


class Graph6Error(ValueError):
    """Malformed graph6 input; `offset` is the failing byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class Graph:
    """Immutable simple undirected graph; `adj[v]` is the bitmask of N(v)."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj):
        adj = tuple(adj)
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        if len(adj) != n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"row {v} references vertices >= n")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v in range(n):
            for u in _bits(adj[v]):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge ({v}, {u})")
        self.n = n
        self.adj = adj

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        return max(self.adj[v].bit_count() for v in range(self.n))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]

    def subgraph(self, vertices) -> "Graph":
        """Induced subgraph on `vertices`, relabeled in sorted order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        rows = [0] * len(keep)
        for v in keep:
            for u in _bits(self.adj[v]):
                if u in index:
                    rows[index[v]] |= 1 << index[u]
        return Graph(len(keep), rows)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count()})"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# Small constructors
# ---------------------------------------------------------------------------


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def empty(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def blowup(g: Graph, t: int) -> Graph:
    """Replace every vertex by t pairwise non-adjacent twins."""
    if t < 1:
        raise ValueError("blow-up factor must be >= 1")
    rows = [0] * (g.n * t)
    for u, v in g.edges():
        for i in range(t):
            for j in range(t):
                rows[u * t + i] |= 1 << (v * t + j)
                rows[v * t + j] |= 1 << (u * t + i)
    return Graph(g.n * t, rows)


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------


def is_triangle_free(g: Graph) -> bool:
    return all(not g.adj[u] & g.adj[v] for u, v in g.edges())


def girth(g: Graph):
    """Length of the shortest cycle; math.inf for forests."""
    best = inf
    for start in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[start] = 0
        queue = [start]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            if 2 * dist[u] >= best:
                break
            for v in _bits(g.adj[u]):
                if dist[v] == -1:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def has_induced_2matching(g: Graph) -> bool:
    """Two edges on four distinct vertices spanning no other edge."""
    edges = g.edges()
    for i, (a, b) in enumerate(edges):
        span_ab = g.adj[a] | g.adj[b]
        for c, d in edges[i + 1 :]:
            if c in (a, b) or d in (a, b):
                continue
            if span_ab >> c & 1 or span_ab >> d & 1:
                continue
            return True
    return False


def independence_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact maximum independent set size plus one witness, by branch-and-bound."""
    n, adj = g.n, g.adj
    closed = [adj[v] | (1 << v) for v in range(n)]

    # greedy start: repeatedly take a minimum-degree vertex
    mask = (1 << n) - 1
    greedy = 0
    while mask:
        v = min(_bits(mask), key=lambda u: (adj[u] & mask).bit_count())
        greedy |= 1 << v
        mask &= ~closed[v]
    best_size = greedy.bit_count()
    best_set = greedy

    def matching_bound(cand: int) -> int:
        # alpha(P) <= |P| - (size of any matching inside P)
        matched = 0
        used = 0
        m = cand
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if used >> v & 1:
                continue
            nb = adj[v] & cand & ~used & ~low
            if nb:
                w = (nb & -nb).bit_length() - 1
                used |= (1 << v) | (1 << w)
                matched += 1
        return cand.bit_count() - matched

    def expand(cand: int, chosen: int, size: int):
        nonlocal best_size, best_set
        if not cand:
            if size > best_size:
                best_size, best_set = size, chosen
            return
        if size + matching_bound(cand) <= best_size:
            return
        degs = [((adj[v] & cand).bit_count(), v) for v in _bits(cand)]
        top_deg, v = max(degs)
        if top_deg <= 1:
            # paths of length one and isolated vertices: take |P| - #edges
            extra = cand.bit_count() - sum(d for d, _ in degs) // 2
            if size + extra > best_size:
                pick = 0
                m = cand
                for d, u in sorted(degs, key=lambda t: t[1]):
                    if m >> u & 1:
                        pick |= 1 << u
                        m &= ~closed[u]
                best_size, best_set = size + extra, chosen | pick
            return
        expand(cand & ~closed[v], chosen | (1 << v), size + 1)
        expand(cand & ~(1 << v), chosen, size)

    expand((1 << n) - 1, 0, 0)
    return best_size, tuple(_bits(best_set))


# ---------------------------------------------------------------------------
# graph6 codec
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_decode_n(data: bytes):
    """Return (n, offset past the size field)."""
    if not data:
        raise Graph6Error("empty graph6 input", 0)
    c0 = data[0]
    if c0 == 126:
        if len(data) >= 2 and data[1] == 126:
            if len(data) < 8:
                raise Graph6Error("truncated 8-byte size field", len(data))
            vals = [b - 63 for b in data[2:8]]
            if any(v < 0 or v > 63 for v in vals):
                raise Graph6Error("invalid size byte", 2)
            n = 0
            for v in vals:
                n = n << 6 | v
            return n, 8
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte size field", len(data))
        vals = [b - 63 for b in data[1:4]]
        if any(v < 0 or v > 63 for v in vals):
            raise Graph6Error("invalid size byte", 1)
        return vals[0] << 12 | vals[1] << 6 | vals[2], 4
    if not 63 <= c0 <= 125:
        raise Graph6Error(f"invalid size byte {c0}", 0)
    return c0 - 63, 1


def load_graph6(data) -> Graph:
    """Parse one graph6 record (optionally prefixed by the standard header)."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(_G6_HEADER.encode("ascii")):
        data = data[len(_G6_HEADER) :]
    n, offset = _g6_decode_n(data)
    if n < 1:
        raise Graph6Error("graph6 record with no vertices", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[offset : offset + nbytes]
    if len(body) < nbytes:
        raise Graph6Error("truncated bit vector", offset + len(body))
    bits = 0
    for i, b in enumerate(body):
        if not 63 <= b <= 126:
            raise Graph6Error(f"invalid data byte {b}", offset + i)
        bits = bits << 6 | (b - 63)
    bits >>= 6 * nbytes - nbits  # drop the padding
    rows = [0] * n
    pos = nbits - 1
    for v in range(1, n):
        for u in range(v):
            if bits >> pos & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            pos -= 1
    return Graph(n, rows)


def save_graph6(g: Graph) -> str:
    """Encode in standard graph6 (short or long size field as appropriate)."""
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in range(30, -1, -6)]
    bits = 0
    nbits = n * (n - 1) // 2
    for v in range(1, n):
        for u in range(v):
            bits = bits << 1 | (g.adj[u] >> v & 1)
    bits <<= (6 - nbits % 6) % 6
    nbytes = (nbits + 5) // 6
    body = [((bits >> 6 * (nbytes - 1 - i)) & 63) + 63 for i in range(nbytes)]
    return bytes(head + body).decode("ascii")


def load_graph6_lines(text: str) -> list[Graph]:
    return [load_graph6(line) for line in text.splitlines() if line.strip()]


# ---------------------------------------------------------------------------
# Canonical labeling (degree refinement + individualization)
# ---------------------------------------------------------------------------


def _refine(adj, cells):
    """Equitable refinement of an ordered partition; deterministic."""
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        for splitter in cells:
            smask = 0
            for v in splitter:
                smask |= 1 << v
            out = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((adj[v] & smask).bit_count(), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    changed = True
                    for key in sorted(groups):
                        out.append(groups[key])
            cells = out
            if changed:
                break
    return cells


def _cell_is_twin_class(adj, cell):
    """True when any ordering inside the cell yields the same labeled graph."""
    cmask = 0
    for v in cell:
        cmask |= 1 << v
    outside = adj[cell[0]] & ~cmask
    if any(adj[v] & ~cmask != outside for v in cell[1:]):
        return False
    inner = [adj[v] & cmask for v in cell]
    if all(i == 0 for i in inner):
        return True
    return all(inner[k] == cmask ^ (1 << v) for k, v in enumerate(cell))


def _perm_key(adj, perm):
    rows = []
    for i, v in enumerate(perm):
        bits = 0
        for j in range(i):
            if adj[v] >> perm[j] & 1:
                bits |= 1 << j
        rows.append(bits)
    return tuple(rows)


def _canon_core(adj, n):
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(adj[v].bit_count(), []).append(v)
    start = [by_degree[d] for d in sorted(by_degree)]
    best = None

    def search(cells):
        nonlocal best
        idx = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if idx is None:
            key = _perm_key(adj, [v for c in cells for v in c])
            if best is None or key < best:
                best = key
            return
        cell = cells[idx]
        if _cell_is_twin_class(adj, cell):
            split = cells[:idx] + [[v] for v in cell] + cells[idx + 1 :]
            search(_refine(adj, split))
            return
        for v in cell:
            rest = [u for u in cell if u != v]
            split = cells[:idx] + [[v], rest] + cells[idx + 1 :]
            search(_refine(adj, split))

    search(_refine(adj, start))
    return best


def canonical_key(g: Graph) -> tuple:
    """Hashable isomorphism certificate: equal keys iff isomorphic graphs.

    Isolated vertices are stripped first (they only contribute a count),
    which keeps the search tree small on near-empty graphs.
    """
    isolated = sum(1 for row in g.adj if row == 0)
    core_vertices = [v for v in range(g.n) if g.adj[v]]
    if not core_vertices:
        return (g.n, isolated, ())
    core = g.subgraph(core_vertices)
    return (g.n, isolated, _canon_core(core.adj, core.n))


# ---------------------------------------------------------------------------
# Enumeration of triangle-free graphs up to isomorphism
# ---------------------------------------------------------------------------


def _independent_subsets(g: Graph):
    """All vertex masks spanning no edge (attachment sets that stay triangle-free)."""
    subsets = [0]
    for v in range(g.n):
        lower = [s for s in subsets if not g.adj[v] & s]
        subsets.extend(s | (1 << v) for s in lower)
    return subsets


def enumerate_triangle_free(n: int) -> list[Graph]:
    """One representative per isomorphism class of triangle-free graphs on n vertices.

    Augments the (n-1)-vertex representatives by one new vertex attached to
    an independent set, deduplicating by canonical key; practical for n <= 8.
    """
    if n < 1:
        raise ValueError("vertex count must be >= 1")
    level = {canonical_key(empty(1)): empty(1)}
    for m in range(2, n + 1):
        nxt: dict[tuple, Graph] = {}
        for parent in level.values():
            for mask in _independent_subsets(parent):
                rows = [row | ((mask >> v & 1) << (m - 1)) for v, row in enumerate(parent.adj)]
                rows.append(mask)
                child = Graph(m, rows)
                key = canonical_key(child)
                if key not in nxt:
                    nxt[key] = child
        level = nxt
    return [level[k] for k in sorted(level)]


def count_edge_rooted_flags4() -> int:
    """Triangle-free 4-vertex graphs with a labeled root edge, up to root-fixing iso.

    The two roots are fixed pointwise; only the two non-root vertices may swap.
    """
    optional = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    swap = {0: 0, 1: 1, 2: 3, 3: 2}
    classes = set()
    for pick in range(1 << len(optional)):
        edges = [(0, 1)] + [e for i, e in enumerate(optional) if pick >> i & 1]
        g = Graph.from_edges(4, edges)
        if not is_triangle_free(g):
            continue
        plain = tuple(sorted(tuple(sorted(e)) for e in edges))
        swapped = tuple(sorted(tuple(sorted((swap[u], swap[v]))) for u, v in edges))
        classes.add(min(plain, swapped))
    return len(classes)


# ---------------------------------------------------------------------------
# Named graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NamedGraph:
    name: str
    graph: Graph
    expected_srg: tuple[int, int, int, int] | None = None


def srg_parameters(g: Graph) -> tuple[int, int, int, int]:
    """(n, k, lambda, mu) of a strongly regular graph; IntegrityError otherwise."""
    degrees = {g.degree(v) for v in range(g.n)}
    if len(degrees) != 1:
        raise IntegrityError(f"not regular: degrees {sorted(degrees)}")
    k = degrees.pop()
    lam: set[int] = set()
    mu: set[int] = set()
    for u in range(g.n):
        for v in range(u + 1, g.n):
            common = (g.adj[u] & g.adj[v]).bit_count()
            (lam if g.has_edge(u, v) else mu).add(common)
    if len(lam) > 1 or len(mu) > 1:
        raise IntegrityError(f"not strongly regular: lambda {sorted(lam)}, mu {sorted(mu)}")
    return (g.n, k, lam.pop() if lam else 0, mu.pop() if mu else 0)


def _validate_named(name: str, g: Graph, expected: tuple[int, int, int, int]) -> None:
    params = srg_parameters(g)
    if params != expected:
        raise IntegrityError(f"{name}: got SRG parameters {params}, expected {expected}")
    if params[2] != 0:
        raise IntegrityError(f"{name}: lambda != 0, graph has triangles")


def petersen() -> Graph:
    """Kneser graph K(5,2): 2-subsets of a 5-set, adjacent iff disjoint."""
    verts = list(combinations(range(5), 2))
    index = {s: i for i, s in enumerate(verts)}
    edges = [
        (index[a], index[b])
        for a, b in combinations(verts, 2)
        if not set(a) & set(b)
    ]
    return Graph.from_edges(10, edges)


def clebsch() -> Graph:
    """Vertices GF(2)^4; adjacent iff the difference has weight 1 or 4."""
    edges = [
        (x, y)
        for x in range(16)
        for y in range(x + 1, 16)
        if (x ^ y).bit_count() in (1, 4)
    ]
    return Graph.from_edges(16, edges)


def hoffman_singleton() -> Graph:
    """Five pentagons P_h and five pentagrams Q_i; p(h,j) ~ q(i, h*i+j mod 5)."""
    p = lambda h, j: 5 * h + j
    q = lambda i, j: 25 + 5 * i + j
    edges = []
    for h in range(5):
        for j in range(5):
            edges.append((p(h, j), p(h, (j + 1) % 5)))
            edges.append((q(h, j), q(h, (j + 2) % 5)))
    for h in range(5):
        for i in range(5):
            for j in range(5):
                edges.append((p(h, j), q(i, (h * i + j) % 5)))
    return Graph.from_edges(50, {tuple(sorted(e)) for e in edges})


_NAMED_SPECS: dict[str, tuple] = {
    "c5": (lambda: cycle(5), (5, 2, 0, 1)),
    "petersen": (petersen, (10, 3, 0, 1)),
    "clebsch": (clebsch, (16, 5, 0, 2)),
    "hoffman_singleton": (hoffman_singleton, (50, 7, 0, 1)),
}


def _register_embedded():
    from . import _named_data

    _NAMED_SPECS.update(
        {
            "gewirtz": (lambda: load_graph6(_named_data.GEWIRTZ_G6), (56, 10, 0, 2)),
            "m22": (lambda: load_graph6(_named_data.M22_G6), (77, 16, 0, 4)),
            "higman_sims": (lambda: load_graph6(_named_data.HIGMAN_SIMS_G6), (100, 22, 0, 6)),
        }
    )


NAMED_GRAPH_NAMES = ("c5", "petersen", "clebsch", "hoffman_singleton", "gewirtz",
                     "m22", "higman_sims")


@lru_cache(maxsize=None)
def named(name: str) -> NamedGraph:
    """Load a named graph and verify its strongly-regular parameters."""
    if len(_NAMED_SPECS) == 4:
        _register_embedded()
    if name not in _NAMED_SPECS:
        raise ValueError(f"unknown named graph {name!r}; choose from {NAMED_GRAPH_NAMES}")
    builder, expected = _NAMED_SPECS[name]
    g = builder()
    _validate_named(name, g, expected)
    return NamedGraph(name, g, expected)
