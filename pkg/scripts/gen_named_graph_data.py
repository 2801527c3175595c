#!/usr/bin/env python3
"""Regenerate src/halfgraph/_named_data.py (embedded graph6 for three graphs).

Construction route: PG(2,4) -> one orbit class of hyperovals -> the Steiner
system S(3,6,22) -> block graphs:

  * Gewirtz     = 56 blocks missing the extension point, adjacent iff disjoint
  * M22 graph   = all 77 blocks, adjacent iff disjoint
  * Higman-Sims = apex + 22 points + 77 blocks (apex~points, point~containing
                  block, blocks adjacent iff disjoint)

Everything is re-verified here (projective plane axioms, Steiner property,
strongly-regular parameters) before the data is written; loading the package
re-verifies the SRG parameters again.
"""

from itertools import combinations
from pathlib import Path
import sys

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from halfgraph.graphcore import Graph, save_graph6, srg_parameters

# GF(4) = {0, 1, w, w+1} encoded as 0..3 with w^2 = w + 1
GF4_MUL = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]]


def gf4_mul(a, b):
    return GF4_MUL[a][b]


def gf4_add(a, b):
    return a ^ b


def pg24_points():
    """Normalized homogeneous triples over GF(4): 21 points."""
    pts = []
    for x in range(4):
        for y in range(4):
            for z in range(4):
                if (x, y, z) == (0, 0, 0):
                    continue
                first = next(c for c in (x, y, z) if c)
                if first == 1:
                    pts.append((x, y, z))
    assert len(pts) == 21
    return pts


def pg24_lines(points):
    """Lines as point index sets (each line = kernel of a normalized functional)."""
    lines = set()
    for a, b, c in points:  # functionals are also normalized triples
        line = frozenset(
            i
            for i, (x, y, z) in enumerate(points)
            if gf4_add(gf4_add(gf4_mul(a, x), gf4_mul(b, y)), gf4_mul(c, z)) == 0
        )
        assert len(line) == 5
        lines.add(line)
    lines = sorted(lines, key=sorted)
    assert len(lines) == 21
    return lines


def hyperovals(points, lines):
    """All 6-point sets meeting every line in at most 2 points."""
    collinear = set()
    for line in lines:
        for triple in combinations(sorted(line), 3):
            collinear.add(triple)
    ovals = []
    for cand in combinations(range(21), 6):
        if all(t not in collinear for t in combinations(cand, 3)):
            ovals.append(frozenset(cand))
    assert len(ovals) == 168
    return ovals


def hyperoval_class(ovals):
    """One of the three 56-element classes (pairwise even intersections)."""
    seed = ovals[0]
    cls = [o for o in ovals if len(o & seed) % 2 == 0]
    assert len(cls) == 56
    for a, b in combinations(cls, 2):
        assert len(a & b) % 2 == 0
    return cls


def steiner_3_6_22(points, lines, oval_class):
    """Blocks of S(3,6,22): extended lines plus one hyperoval class."""
    ext = 21  # the extension point added to every line
    blocks = [frozenset(line | {ext}) for line in lines] + list(oval_class)
    blocks = sorted(blocks, key=sorted)
    assert len(blocks) == 77
    seen: dict[tuple, int] = {}
    for bi, block in enumerate(blocks):
        for triple in combinations(sorted(block), 3):
            assert triple not in seen, "triple covered twice"
            seen[triple] = bi
    assert len(seen) == len(list(combinations(range(22), 3)))
    return blocks


def block_graph(blocks):
    n = len(blocks)
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if not blocks[i] & blocks[j]
    ]
    return Graph.from_edges(n, edges)


def higman_sims_graph(blocks):
    """Apex 0, points 1..22, blocks 23..99."""
    edges = [(0, 1 + p) for p in range(22)]
    for bi, block in enumerate(blocks):
        for p in block:
            edges.append((1 + p, 23 + bi))
    for i in range(77):
        for j in range(i + 1, 77):
            if not blocks[i] & blocks[j]:
                edges.append((23 + i, 23 + j))
    return Graph.from_edges(100, edges)


def main():
    points = pg24_points()
    lines = pg24_lines(points)
    ovals = hyperovals(points, lines)
    cls = hyperoval_class(ovals)
    blocks = steiner_3_6_22(points, lines, cls)

    gewirtz = block_graph([b for b in blocks if 21 not in b])
    m22 = block_graph(blocks)
    hs = higman_sims_graph(blocks)

    assert srg_parameters(gewirtz) == (56, 10, 0, 2)
    assert srg_parameters(m22) == (77, 16, 0, 4)
    assert srg_parameters(hs) == (100, 22, 0, 6)

    out = Path(__file__).resolve().parent.parent / "src" / "halfgraph" / "_named_data.py"
    with open(out, "w") as fh:
        fh.write('"""Embedded graph6 data for the three large named graphs.\n\n')
        fh.write("Generated by scripts/gen_named_graph_data.py; validated against their\n")
        fh.write("strongly-regular parameters both there and again at load time.\n")
        fh.write('"""\n\n')
        fh.write(f'GEWIRTZ_G6 = "{save_graph6(gewirtz)}"\n\n')
        fh.write(f'M22_G6 = "{save_graph6(m22)}"\n\n')
        fh.write(f'HIGMAN_SIMS_G6 = "{save_graph6(hs)}"\n')
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
