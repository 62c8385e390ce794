"""Subgraph isomorphism enumeration, graph isomorphism, and automorphism orbits.

The matcher is a VF2-style backtracking search over bitmask adjacency rows:
pattern vertices are placed in a fixed order (descending degree, connected
expansion), candidates come from the neighborhood of an already-placed anchor,
and the induced/non-induced condition is one mask comparison per candidate.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterator

from .graphs import Graph, GraphError

DEFAULT_ORBIT_CAP = 10


class MatchTimeout(Exception):
    """Raised when an enumeration exceeds its deadline."""


@dataclass(frozen=True)
class Match:
    """One injective adjacency-preserving map from pattern to target."""

    mapping: tuple[int, ...]
    image_vertex_set: frozenset[int]
    image_edge_set: frozenset[tuple[int, int]]


# ──────────────────────────────────────────────────────────────────────
# Core backtracking search
# ──────────────────────────────────────────────────────────────────────

def _pattern_order(H: Graph, allow_disconnected: bool) -> tuple[list[int], list[int]]:
    """Placement order and per-position anchor (earlier neighbor position).

    Greedy: start at a max-degree vertex, then repeatedly take the unplaced
    vertex with the most placed neighbors (ties: higher degree, lower index).
    Returns (order, anchor) where anchor[i] is a position < i whose pattern
    vertex is adjacent to order[i], or -1 when none exists (first vertex of
    each connected component).
    """
    k = H.n
    placed = [False] * k
    order: list[int] = []
    anchor: list[int] = []
    pos_of = [-1] * k
    for _ in range(k):
        best = None
        best_key = None
        for v in range(k):
            if placed[v]:
                continue
            placed_nbrs = sum(1 for u in H.neighbors[v] if placed[u])
            key = (placed_nbrs, H.degree(v), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        assert best is not None
        placed_nbrs = best_key[0]
        if placed_nbrs == 0 and order and not allow_disconnected:
            raise GraphError(
                "disconnected pattern requires allow_disconnected=True"
            )
        a = -1
        if placed_nbrs > 0:
            a = next(pos_of[u] for u in H.neighbors[best] if placed[u])
        pos_of[best] = len(order)
        order.append(best)
        anchor.append(a)
        placed[best] = True
    return order, anchor


def _search(
    H: Graph,
    G: Graph,
    induced: bool,
    allow_disconnected: bool = False,
    labels_h: tuple[int, ...] | None = None,
    labels_g: tuple[int, ...] | None = None,
    deadline: float | None = None,
    find_one: bool = False,
) -> Iterator[tuple[int, ...]]:
    """Yield mappings as tuples indexed by pattern vertex.

    When ``labels_h``/``labels_g`` are given, candidates must match on them
    and, if both graphs carry edge labels, on edge labels as well.
    """
    k, n = H.n, G.n
    if k == 0 or k > n:
        return
    order, anchor = _pattern_order(H, allow_disconnected)
    adj_g = G.adj
    deg_g = [G.degree(v) for v in range(n)]
    deg_h = [H.degree(v) for v in range(k)]
    # earlier-placed pattern neighbors per position
    pos_of = {v: i for i, v in enumerate(order)}
    earlier: list[list[int]] = []
    for i, p in enumerate(order):
        earlier.append(sorted(pos_of[u] for u in H.neighbors[p] if pos_of[u] < i))

    check_edge_labels = (
        labels_h is not None
        and H.edge_labels is not None
        and G.edge_labels is not None
    )
    elab_h = H.edge_label_map() if check_edge_labels else {}
    elab_g = G.edge_label_map() if check_edge_labels else {}

    images = [0] * k          # image vertex per position
    placed_mask = 0
    mapping = [0] * k         # image per pattern vertex
    node_budget = 0
    stack: list[Iterator[int]] = []

    def candidates(i: int, placed_mask: int) -> Iterator[int]:
        if anchor[i] >= 0:
            rest = adj_g[images[anchor[i]]] & ~placed_mask
            while rest:
                bit = rest & -rest
                rest ^= bit
                yield bit.bit_length() - 1
        else:
            for c in range(n):
                if not placed_mask >> c & 1:
                    yield c

    stack.append(candidates(0, 0))
    while stack:
        if deadline is not None:
            node_budget += 1
            if node_budget >= 4096:
                node_budget = 0
                if time.monotonic() > deadline:
                    raise MatchTimeout
        i = len(stack) - 1
        p = order[i]
        req = 0
        for j in earlier[i]:
            req |= 1 << images[j]
        found = False
        for c in stack[-1]:
            if deg_g[c] < deg_h[p]:
                continue
            if labels_h is not None and labels_g[c] != labels_h[p]:
                continue
            if induced:
                if adj_g[c] & placed_mask != req:
                    continue
            else:
                if adj_g[c] & req != req:
                    continue
            if check_edge_labels:
                ok = True
                for j in earlier[i]:
                    q = order[j]
                    key_h = (p, q) if p < q else (q, p)
                    u = images[j]
                    key_g = (c, u) if c < u else (u, c)
                    if elab_h.get(key_h) != elab_g.get(key_g):
                        ok = False
                        break
                if not ok:
                    continue
            images[i] = c
            mapping[p] = c
            if i == k - 1:
                yield tuple(mapping)
                if find_one:
                    return
                continue
            placed_mask |= 1 << c
            stack.append(candidates(i + 1, placed_mask))
            found = True
            break
        if not found:
            stack.pop()
            if stack:
                placed_mask &= ~(1 << images[len(stack) - 1])


def _check_pattern(H: Graph, allow_disconnected: bool) -> None:
    if H.n == 0:
        raise GraphError("empty pattern")
    if not allow_disconnected and not H.is_connected():
        raise GraphError("disconnected pattern requires allow_disconnected=True")


def enumerate_matches(
    H: Graph,
    G: Graph,
    induced: bool = True,
    allow_disconnected: bool = False,
    deadline: float | None = None,
) -> Iterator[Match]:
    """Every injective map H -> G preserving adjacency (and, if induced,
    non-adjacency).  Total yields = #distinct subgraphs x |Aut(H)|.
    """
    _check_pattern(H, allow_disconnected)
    edges_h = H.edges
    for mapping in _search(H, G, induced, allow_disconnected, deadline=deadline):
        image_edges = frozenset(
            (a, b) if a < b else (b, a)
            for a, b in ((mapping[u], mapping[v]) for u, v in edges_h)
        )
        yield Match(mapping, frozenset(mapping), image_edges)


def count_matches(
    H: Graph,
    G: Graph,
    induced: bool = True,
    allow_disconnected: bool = False,
    deadline: float | None = None,
) -> int:
    _check_pattern(H, allow_disconnected)
    return sum(
        1 for _ in _search(H, G, induced, allow_disconnected, deadline=deadline)
    )


def canonical_matches(
    H: Graph,
    G: Graph,
    induced: bool = True,
    allow_disconnected: bool = False,
    automorphisms: tuple[tuple[int, ...], ...] | None = None,
    deadline: float | None = None,
) -> Iterator[tuple[int, ...]]:
    """One designated mapping per distinct subgraph.

    A mapping f is kept iff the tuple (f[0], ..., f[k-1]) is lexicographically
    minimal among {f o a : a in Aut(H)}; exactly one representative per orbit
    of Aut(H) on mappings survives, and orbits of mappings correspond 1-1 to
    distinct subgraphs (by image vertex set when induced, image edge set
    otherwise).
    """
    _check_pattern(H, allow_disconnected)
    if automorphisms is None:
        automorphisms = tuple(_search(H, H, induced=True, allow_disconnected=True))
    nontrivial = [a for a in automorphisms if a != tuple(range(H.n))]
    for f in _search(H, G, induced, allow_disconnected, deadline=deadline):
        minimal = True
        for a in nontrivial:
            for i in range(H.n):
                fa = f[a[i]]
                if fa < f[i]:
                    minimal = False
                    break
                if fa > f[i]:
                    break
            if not minimal:
                break
        if minimal:
            yield f


def count_distinct_subgraphs(
    H: Graph,
    G: Graph,
    induced: bool = True,
    allow_disconnected: bool = False,
    automorphisms: tuple[tuple[int, ...], ...] | None = None,
    deadline: float | None = None,
) -> int:
    """Number of distinct subgraphs of G isomorphic to H.

    Equals count_matches / |Aut(H)|; computed by keeping one canonical match
    per subgraph so no dedup storage is needed.
    """
    return sum(
        1
        for _ in canonical_matches(
            H, G, induced, allow_disconnected, automorphisms, deadline
        )
    )


# ──────────────────────────────────────────────────────────────────────
# Full-graph isomorphism
# ──────────────────────────────────────────────────────────────────────

def _joint_wl_colors(
    G1: Graph, G2: Graph
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Jointly refined 1-WL colors; comparable across the two graphs."""
    intern: dict = {}

    def get(key):
        if key not in intern:
            intern[key] = len(intern)
        return intern[key]

    def init(G: Graph) -> list[int]:
        if G.vertex_labels is not None:
            return [get(("lab", l)) for l in G.vertex_labels]
        return [get(("lab", None))] * G.n

    c1, c2 = init(G1), init(G2)
    ncolors = len(intern)
    while True:
        intern_round: dict = {}

        def refine(G: Graph, colors: list[int]) -> list[int]:
            out = []
            elab = G.edge_label_map() if G.edge_labels is not None else None
            for v in range(G.n):
                if elab is None:
                    sig = tuple(sorted(colors[u] for u in G.neighbors[v]))
                else:
                    # missing per-edge labels sort first via the -inf sentinel
                    sig = tuple(
                        sorted(
                            (
                                elab.get(
                                    (u, v) if u < v else (v, u), float("-inf")
                                ),
                                colors[u],
                            )
                            for u in G.neighbors[v]
                        )
                    )
                key = (colors[v], sig)
                if key not in intern_round:
                    intern_round[key] = len(intern_round)
                out.append(intern_round[key])
            return out

        n1, n2 = refine(G1, c1), refine(G2, c2)
        if len(intern_round) == ncolors:
            return tuple(c1), tuple(c2)
        ncolors = len(intern_round)
        c1, c2 = n1, n2


def are_isomorphic(G1: Graph, G2: Graph) -> bool:
    """Exact isomorphism test; vertex/edge labels respected when present."""
    if G1.n != G2.n or G1.m != G2.m:
        return False
    if sorted(G1.degree(v) for v in range(G1.n)) != sorted(
        G2.degree(v) for v in range(G2.n)
    ):
        return False
    if G1.n == 0:
        return True
    c1, c2 = _joint_wl_colors(G1, G2)
    if sorted(c1) != sorted(c2):
        return False
    for _ in _search(
        G1, G2, induced=True, allow_disconnected=True,
        labels_h=c1, labels_g=c2, find_one=True,
    ):
        return True
    return False


# ──────────────────────────────────────────────────────────────────────
# Automorphism orbits
# ──────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class OrbitPartition:
    """Vertex and edge orbits of Aut(H), canonically ordered.

    edge_endpoint_orbits[o] is the (i, j) pair of vertex-orbit indices at the
    ends of every edge in edge orbit o, with i <= j; orbit_degrees[i] is the
    common H-degree of the vertices in vertex orbit i.
    """

    vertex_orbits: tuple[tuple[int, ...], ...]
    edge_orbits: tuple[tuple[tuple[int, int], ...], ...]
    aut_size: int
    automorphisms: tuple[tuple[int, ...], ...] = field(repr=False)
    vertex_orbit_of: tuple[int, ...] = field(repr=False)
    orbit_degrees: tuple[int, ...] = field(repr=False)
    edge_endpoint_orbits: tuple[tuple[int, int], ...] = field(repr=False)

    @property
    def d(self) -> int:
        return len(self.vertex_orbits)

    @property
    def num_edge_orbits(self) -> int:
        return len(self.edge_orbits)

    def edge_orbit_of(self) -> dict[tuple[int, int], int]:
        return {
            e: idx for idx, orbit in enumerate(self.edge_orbits) for e in orbit
        }


def _wl_codes_single(H: Graph) -> list[int]:
    """Deterministic vertex codes from 1-WL on H alone (orbit-invariant)."""
    colors = [0] * H.n
    ncolors = 1
    while True:
        table: dict = {}
        out = []
        for v in range(H.n):
            key = (colors[v], tuple(sorted(colors[u] for u in H.neighbors[v])))
            if key not in table:
                table[key] = len(table)
            out.append(table[key])
        if len(table) == ncolors:
            return colors
        ncolors = len(table)
        colors = out


def automorphisms_of(H: Graph) -> tuple[tuple[int, ...], ...]:
    return tuple(_search(H, H, induced=True, allow_disconnected=True))


def compute_orbits(H: Graph, cap: int = DEFAULT_ORBIT_CAP) -> OrbitPartition:
    """Orbit partition of V(H) and E(H) under the full automorphism group."""
    if H.n > cap:
        raise GraphError(
            f"pattern has {H.n} vertices, above the orbit cap {cap}"
        )
    if H.n == 0:
        raise GraphError("empty pattern")
    auts = automorphisms_of(H)

    parent = list(range(H.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in auts:
        for v in range(H.n):
            rv, ra = find(v), find(a[v])
            if rv != ra:
                parent[ra] = rv
    groups: dict[int, list[int]] = {}
    for v in range(H.n):
        groups.setdefault(find(v), []).append(v)

    codes = _wl_codes_single(H)
    vertex_orbits = sorted(
        (tuple(sorted(g)) for g in groups.values()),
        key=lambda orb: (
            len(orb),
            H.degree(orb[0]),
            tuple(sorted(codes[v] for v in orb)),
            orb[0],
        ),
    )
    orbit_of = [0] * H.n
    for idx, orb in enumerate(vertex_orbits):
        for v in orb:
            orbit_of[v] = idx

    eparent = {e: e for e in H.edges}

    def efind(e):
        while eparent[e] != e:
            eparent[e] = eparent[eparent[e]]
            e = eparent[e]
        return e

    for a in auts:
        for u, v in H.edges:
            x, y = a[u], a[v]
            img = (x, y) if x < y else (y, x)
            r1, r2 = efind((u, v)), efind(img)
            if r1 != r2:
                eparent[r2] = r1
    egroups: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for e in H.edges:
        egroups.setdefault(efind(e), []).append(e)

    def edge_key(orbit: list[tuple[int, int]]):
        u, v = orbit[0]
        pair = tuple(sorted((orbit_of[u], orbit_of[v])))
        return (pair, len(orbit), min(orbit))

    edge_orbits = sorted(
        (tuple(sorted(g)) for g in egroups.values()), key=edge_key
    )
    endpoint_orbits = tuple(
        tuple(sorted((orbit_of[orb[0][0]], orbit_of[orb[0][1]])))
        for orb in edge_orbits
    )
    return OrbitPartition(
        vertex_orbits=tuple(vertex_orbits),
        edge_orbits=tuple(edge_orbits),
        aut_size=len(auts),
        automorphisms=auts,
        vertex_orbit_of=tuple(orbit_of),
        orbit_degrees=tuple(H.degree(orb[0]) for orb in vertex_orbits),
        edge_endpoint_orbits=endpoint_orbits,
    )


# ──────────────────────────────────────────────────────────────────────
# Canonical codes (small graphs / trees) for stable pattern ordering
# ──────────────────────────────────────────────────────────────────────

CANONICAL_CAP = 8


def _min_perm_code(G: Graph) -> str:
    """Lexicographically minimal upper-triangle bitstring over all
    relabelings; exponential, so capped at CANONICAL_CAP vertices."""
    n = G.n
    best: list[int] | None = None

    def extend(perm: list[int], used: int, bits: list[int]) -> None:
        nonlocal best
        i = len(perm)
        if i == n:
            if best is None or bits < best:
                best = list(bits)
            return
        for v in range(n):
            if used >> v & 1:
                continue
            new_bits = bits + [1 if G.has_edge(perm[j], v) else 0 for j in range(i)]
            if best is not None:
                prefix = best[: len(new_bits)]
                if new_bits > prefix:
                    continue
            extend(perm + [v], used | 1 << v, new_bits)

    extend([], 0, [])
    assert best is not None
    return "".join(map(str, best))


def _ahu_code(G: Graph) -> str:
    """Canonical string for a tree (rooted at its center(s))."""

    def rooted(root: int, parent: int) -> str:
        subs = sorted(
            rooted(u, root) for u in G.neighbors[root] if u != parent
        )
        return "(" + "".join(subs) + ")"

    # peel leaves to find the 1- or 2-vertex center
    if G.n == 1:
        return "()"
    deg = [G.degree(v) for v in range(G.n)]
    remaining = set(range(G.n))
    leaves = [v for v in remaining if deg[v] <= 1]
    while len(remaining) > 2:
        new_leaves = []
        for v in leaves:
            remaining.discard(v)
            for u in G.neighbors[v]:
                if u in remaining:
                    deg[u] -= 1
                    if deg[u] == 1:
                        new_leaves.append(u)
        leaves = new_leaves
    return min(rooted(r, -1) for r in remaining)


def canonical_code(G: Graph) -> str:
    """Deterministic isomorphism-invariant code for small patterns."""
    if G.m == G.n - 1 and G.is_connected():
        return f"T{G.n}:{_ahu_code(G)}"
    if G.n > CANONICAL_CAP:
        raise GraphError(
            f"canonical_code supports trees or graphs with <= {CANONICAL_CAP} vertices"
        )
    return f"G{G.n}:{_min_perm_code(G)}"
