"""Bundled strongly regular graph families and named counterexample graphs.

The graph6 files under ``gsnkit/data`` are generated offline by
``tools/build_sr_dataset.py`` (explicit algebraic constructions plus a
switching-closure search) and shipped with the package; every graph is
verified strongly regular with the advertised parameters and the members of
each file are pairwise non-isomorphic.
"""

from __future__ import annotations

from importlib import resources
from itertools import combinations
from pathlib import Path

from .graphs import Graph, GraphError, SRParameters, graph_from_edges, parse_graph6

SR_FILES: dict[str, SRParameters] = {
    "sr16622.g6": SRParameters(16, 6, 2, 2),
    "sr251256.g6": SRParameters(25, 12, 5, 6),
    "sr261034.g6": SRParameters(26, 10, 3, 4),
    "sr281264.g6": SRParameters(28, 12, 6, 4),
    "sr291467.g6": SRParameters(29, 14, 6, 7),
}

SR_FAMILY_SIZES = {
    SRParameters(16, 6, 2, 2): 2,
    SRParameters(25, 12, 5, 6): 15,
    SRParameters(26, 10, 3, 4): 10,
    SRParameters(28, 12, 6, 4): 4,
    SRParameters(29, 14, 6, 7): 41,
}


def data_dir() -> Path:
    return Path(resources.files("gsnkit") / "data")


def load_sr_file(name: str) -> list[Graph]:
    path = data_dir() / name
    if not path.exists():
        raise GraphError(f"bundled SR file {name} not found under {data_dir()}")
    raw = path.read_bytes()
    graphs = parse_graph6(raw)
    return [
        Graph(g.n, g.edges, name=f"{Path(name).stem}#{i}")
        for i, g in enumerate(graphs)
    ]


def load_bundled_sr() -> dict[SRParameters, list[Graph]]:
    """All bundled SR families keyed by parameters, in file order."""
    return {params: load_sr_file(name) for name, params in SR_FILES.items()}


# ──────────────────────────────────────────────────────────────────────
# Named small graphs
# ──────────────────────────────────────────────────────────────────────

def rook_graph() -> Graph:
    """4x4 rook's graph: cells adjacent in the same row or column; SR(16,6,2,2)."""
    edges = [
        (i, j)
        for i in range(16)
        for j in range(i + 1, 16)
        if i // 4 == j // 4 or i % 4 == j % 4
    ]
    return graph_from_edges(16, edges, name="rook-4x4")


def shrikhande_graph() -> Graph:
    """Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}."""
    deltas = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    edges = []
    for i in range(16):
        for j in range(i + 1, 16):
            d = ((j // 4 - i // 4) % 4, (j % 4 - i % 4) % 4)
            if d in deltas:
                edges.append((i, j))
    return graph_from_edges(16, edges, name="shrikhande")


def decalin_graph() -> Graph:
    """Carbon skeleton of decalin: two hexagons sharing an edge."""
    ring1 = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]
    ring2 = [(4, 6), (6, 7), (7, 8), (8, 9), (9, 5)]
    return graph_from_edges(10, ring1 + ring2, name="decalin")


def bicyclopentyl_graph() -> Graph:
    """Carbon skeleton of bicyclopentyl: two pentagons joined by one edge."""
    ring1 = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
    ring2 = [(5, 6), (6, 7), (7, 8), (8, 9), (9, 5)]
    return graph_from_edges(10, ring1 + ring2 + [(0, 5)], name="bicyclopentyl")


def paley_graph(q: int) -> Graph:
    """Paley graph on GF(q), q ≡ 1 (mod 4); vertices adjacent when their
    difference is a nonzero square.  Supports prime q and q = p^2."""
    if q % 4 != 1:
        raise GraphError("Paley graph needs q ≡ 1 (mod 4)")

    def is_prime(x: int) -> bool:
        return x >= 2 and all(x % f for f in range(2, int(x**0.5) + 1))

    if is_prime(q):
        squares = {pow(x, 2, q) for x in range(1, q)}
        edges = [
            (u, v) for u in range(q) for v in range(u + 1, q)
            if (v - u) % q in squares
        ]
        return graph_from_edges(q, edges, name=f"paley-{q}")
    p = int(round(q**0.5))
    if p * p != q or not is_prime(p):
        raise GraphError(f"paley_graph supports prime q or q = p^2, got {q}")
    # GF(p^2) = F_p[x]/(x^2 - r) for a quadratic non-residue r mod p
    residues = {pow(x, 2, p) for x in range(1, p)}
    r = next(a for a in range(2, p) if a not in residues)
    elems = [(a, b) for a in range(p) for b in range(p)]
    index = {e: i for i, e in enumerate(elems)}

    def mul(x, y):
        a, b = x
        c, d = y
        return ((a * c + r * b * d) % p, (a * d + b * c) % p)

    squares = {mul(e, e) for e in elems if e != (0, 0)}
    edges = []
    for i, (a, b) in enumerate(elems):
        for j in range(i + 1, q):
            c, d = elems[j]
            if ((c - a) % p, (d - b) % p) in squares:
                edges.append((i, j))
    return graph_from_edges(q, edges, name=f"paley-{q}")


def triangular_graph(m: int) -> Graph:
    """T(m): vertices are 2-subsets of an m-set, adjacent when intersecting."""
    pairs = list(combinations(range(m), 2))
    index = {pq: i for i, pq in enumerate(pairs)}
    edges = [
        (index[a], index[b])
        for a, b in combinations(pairs, 2)
        if set(a) & set(b)
    ]
    return graph_from_edges(len(pairs), edges, name=f"T({m})")


def latin_square_graph(square: list[list[int]]) -> Graph:
    """L3 graph of a Latin square: cells adjacent when they share a row,
    column, or symbol."""
    k = len(square)
    cells = [(i, j) for i in range(k) for j in range(k)]
    edges = []
    for a in range(len(cells)):
        ia, ja = cells[a]
        for b in range(a + 1, len(cells)):
            ib, jb = cells[b]
            if ia == ib or ja == jb or square[ia][ja] == square[ib][jb]:
                edges.append((a, b))
    return graph_from_edges(k * k, edges, name=f"latin-{k}")


def cyclic_latin_square(k: int) -> list[list[int]]:
    return [[(i + j) % k for j in range(k)] for i in range(k)]


# ──────────────────────────────────────────────────────────────────────
# Switching operations (generate same-parameter SR graphs)
# ──────────────────────────────────────────────────────────────────────

def seidel_switch(G: Graph, subset) -> Graph:
    """Complement all edges between ``subset`` and its complement."""
    inside = set(subset)
    edges = set(G.edges)
    for u in inside:
        for v in range(G.n):
            if v in inside or v == u:
                continue
            e = (u, v) if u < v else (v, u)
            if e in edges:
                edges.discard(e)
            else:
                edges.add(e)
    return graph_from_edges(G.n, sorted(edges))


def chang_graphs() -> list[Graph]:
    """The three graphs obtained from T(8) by Seidel switching; together with
    T(8) they form the SR(28,12,6,4) family."""
    t8 = triangular_graph(8)
    pairs = list(combinations(range(8), 2))
    index = {pq: i for i, pq in enumerate(pairs)}

    def vertices_for(k8_edges):
        return [index[tuple(sorted(e))] for e in k8_edges]

    matching = [(0, 1), (2, 3), (4, 5), (6, 7)]
    cycle8 = [(i, (i + 1) % 8) for i in range(8)]
    c3 = [(0, 1), (1, 2), (2, 0)]
    c5 = [(3, 4), (4, 5), (5, 6), (6, 7), (7, 3)]
    out = []
    for name, k8_edges in [
        ("chang-4K2", matching),
        ("chang-C8", cycle8),
        ("chang-C3+C5", c3 + c5),
    ]:
        g = seidel_switch(t8, vertices_for(k8_edges))
        out.append(graph_from_edges(g.n, g.edges, name=name))
    return out


def two_graph_descendant(G: Graph, p: int, extend: bool = True) -> Graph:
    """Descendant of a regular two-graph at point p.

    With ``extend`` (for conference-type SR graphs, d = 2μ) the two-graph
    lives on V(G) plus one isolated vertex; without it, on V(G) itself (for
    SR graphs whose own Seidel spectrum has two values).  Either way:
    Seidel-switch so that p loses all its edges, then delete p.  When the
    two-graph is regular every descendant is strongly regular.
    """
    n = G.n
    if not 0 <= p < n:
        raise GraphError(f"descendant point {p} out of range")
    base = graph_from_edges(n + 1, G.edges) if extend else G
    switched = seidel_switch(base, list(G.neighbors[p]))
    return switched.delete_vertex(p)


def godsil_mckay_switch(G: Graph, C) -> Graph | None:
    """Godsil–McKay switching with the single class C, if admissible.

    Requires the subgraph induced on C to be regular and every vertex outside
    C to have 0, |C|/2, or |C| neighbors in C.  Vertices with exactly |C|/2
    neighbors have their adjacencies to C complemented; the result is
    cospectral with G.  Returns None when the conditions fail or the switch
    is a no-op.
    """
    inside = sorted(set(C))
    c = len(inside)
    if c % 2:
        return None
    mask = 0
    for v in inside:
        mask |= 1 << v
    half = c // 2
    deg0 = (G.adj[inside[0]] & mask).bit_count()
    for v in inside[1:]:
        if (G.adj[v] & mask).bit_count() != deg0:
            return None
    to_flip = []
    for v in range(G.n):
        if mask >> v & 1:
            continue
        k = (G.adj[v] & mask).bit_count()
        if k == half:
            to_flip.append(v)
        elif k != 0 and k != c:
            return None
    if not to_flip:
        return None
    edges = set(G.edges)
    for v in to_flip:
        for u in inside:
            e = (u, v) if u < v else (v, u)
            if e in edges:
                edges.discard(e)
            else:
                edges.add(e)
    return graph_from_edges(G.n, sorted(edges))
