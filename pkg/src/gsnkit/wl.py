"""Color refinement: 1-WL and the folklore k-WL family (k = 2, 3).

Colors are interned integers: each distinct (previous color, neighborhood
summary) pair is assigned the next free id by dictionary lookup, so equal ids
mean equal refinement histories and unequal ids mean provably different ones
— no numeric hashing, no collisions.  Comparing two graphs therefore requires
refining them inside one shared interning context; ``wl_distinguish`` and the
``*_joint`` functions do exactly that, running until the joint partition
stops refining.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .graphs import Graph, GraphError

FWL_CAPS = {2: 40, 3: 20}
TESTS = ("wl1", "fwl2", "fwl3")


@dataclass(frozen=True)
class Coloring:
    """Stable coloring of one graph's vertices (k=1) or k-tuples.

    For k >= 2, ``colors[i]`` is the color of the tuple at row-major index i
    in V^k.  ``history`` records the number of distinct joint colors after
    each round (including round 0, the initial coloring); ``round`` is the
    number of refining rounds applied before stability.
    """

    colors: tuple[int, ...]
    round: int
    histogram: tuple[tuple[int, int], ...]
    k: int = 1
    history: tuple[int, ...] = ()

    @property
    def num_colors(self) -> int:
        return len(self.histogram)


@dataclass(frozen=True)
class TupleType:
    """Isomorphism type of a k-tuple: which positions coincide, which are
    adjacent, and (when present) the vertex labels along the tuple.  Two
    tuples get the same initial k-FWL color iff their types are equal.
    """

    equality: tuple[int, ...]
    adjacency: tuple[bool, ...]
    labels: tuple[int, ...] | None

    @staticmethod
    def of(G: Graph, t: tuple[int, ...]) -> "TupleType":
        eq = tuple(t.index(v) for v in t)
        adj = tuple(
            G.has_edge(t[i], t[j])
            for i in range(len(t))
            for j in range(i + 1, len(t))
        )
        labs = (
            tuple(G.vertex_labels[v] for v in t)
            if G.vertex_labels is not None
            else None
        )
        return TupleType(eq, adj, labs)


def _histogram(colors: Sequence[int]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(Counter(colors).items()))


# ──────────────────────────────────────────────────────────────────────
# 1-WL
# ──────────────────────────────────────────────────────────────────────

def _default_init(G: Graph) -> list:
    if G.vertex_labels is not None:
        return [("label", lab) for lab in G.vertex_labels]
    return [("label", 0)] * G.n


def wl1_refine_joint(
    graphs: Sequence[Graph],
    initials: Sequence[Sequence] | None = None,
    use_edge_labels: bool = False,
) -> list[Coloring]:
    """Refine several graphs in one interning context until the partition of
    their combined vertex set stops refining; the returned colorings share a
    color space and are directly comparable."""
    if initials is None:
        initials = [_default_init(G) for G in graphs]
    for G, init in zip(graphs, initials):
        if len(init) != G.n:
            raise GraphError(
                f"initial coloring has {len(init)} entries for n={G.n}"
            )
    interner: dict = {}

    def intern(key) -> int:
        if key not in interner:
            interner[key] = len(interner)
        return interner[key]

    cols = [[intern(("init", x)) for x in init] for init in initials]
    edge_labels = [G.edge_label_map() if use_edge_labels else None
                   for G in graphs]
    history = [len(interner)]
    rounds = 0
    while True:
        before = len(interner)
        new_cols = []
        for G, c, elab in zip(graphs, cols, edge_labels):
            if elab is None:
                new_cols.append([
                    intern((c[v], tuple(sorted(c[u] for u in G.neighbors[v]))))
                    for v in range(G.n)
                ])
            else:
                new_cols.append([
                    intern((c[v], tuple(sorted(
                        (c[u], elab[(min(u, v), max(u, v))])
                        for u in G.neighbors[v]
                    ))))
                    for v in range(G.n)
                ])
        after = len(interner)
        if after - before == history[-1]:
            break  # every class reproduced itself: stable
        cols = new_cols
        rounds += 1
        history.append(after - before)
    return [
        Coloring(tuple(c), rounds, _histogram(c), 1, tuple(history))
        for c in cols
    ]


def wl1_refine(
    G: Graph,
    initial: Sequence | None = None,
    use_edge_labels: bool = False,
) -> Coloring:
    """1-WL to stability: repeatedly replace each vertex color with the
    interned pair (own color, sorted multiset of neighbor colors)."""
    return wl1_refine_joint(
        [G], None if initial is None else [initial], use_edge_labels
    )[0]


# ──────────────────────────────────────────────────────────────────────
# Folklore k-WL
# ──────────────────────────────────────────────────────────────────────

def kfwl_refine_joint(graphs: Sequence[Graph], k: int) -> list[Coloring]:
    """Folklore k-WL on several graphs in one interning context.

    Each k-tuple starts from its isomorphism type; one round replaces the
    color of tuple t with the interned pair (own color, multiset over all
    vertices u of the k-vector of colors of t with each position replaced by
    u in turn).  Runs until the joint tuple partition stops refining.
    """
    if k not in FWL_CAPS:
        raise GraphError(f"k-FWL supports k in {sorted(FWL_CAPS)}, got {k}")
    cap = FWL_CAPS[k]
    for G in graphs:
        if G.n > cap:
            raise GraphError(
                f"n={G.n} exceeds the k={k} folklore-WL cap of {cap}"
            )
    interner: dict = {}

    def intern(key) -> int:
        if key not in interner:
            interner[key] = len(interner)
        return interner[key]

    all_tuples = [list(product(range(G.n), repeat=k)) for G in graphs]
    cols = [
        [intern(("type", TupleType.of(G, t))) for t in tups]
        for G, tups in zip(graphs, all_tuples)
    ]
    # Row-major strides: substituting u at position p moves the flat index
    # by (u - t[p]) * n^(k-1-p).
    strides = [
        [G.n ** (k - 1 - p) for p in range(k)] for G in graphs
    ]
    history = [len(interner)]
    rounds = 0
    while True:
        before = len(interner)
        new_cols = []
        for G, tups, c, st in zip(graphs, all_tuples, cols, strides):
            n = G.n
            out = []
            for idx, t in enumerate(tups):
                base = [idx - t[p] * st[p] for p in range(k)]
                summary = sorted(
                    tuple(c[base[p] + u * st[p]] for p in range(k))
                    for u in range(n)
                )
                out.append(intern((c[idx], tuple(summary))))
            new_cols.append(out)
        after = len(interner)
        if after - before == history[-1]:
            break
        cols = new_cols
        rounds += 1
        history.append(after - before)
    return [
        Coloring(tuple(c), rounds, _histogram(c), k, tuple(history))
        for c in cols
    ]


def kfwl_refine(G: Graph, k: int) -> Coloring:
    return kfwl_refine_joint([G], k)[0]


# ──────────────────────────────────────────────────────────────────────
# Pairwise test
# ──────────────────────────────────────────────────────────────────────

def wl_distinguish(G1: Graph, G2: Graph, test: str = "wl1") -> bool:
    """True iff the chosen refinement proves G1 and G2 non-isomorphic
    (different sizes short-circuit; equal stable histograms mean failure)."""
    if test not in TESTS:
        raise GraphError(f"unknown test {test!r}; choose from {TESTS}")
    if G1.n != G2.n:
        return True
    if test == "wl1":
        c1, c2 = wl1_refine_joint([G1, G2])
    else:
        c1, c2 = kfwl_refine_joint([G1, G2], k=int(test[-1]))
    return c1.histogram != c2.histogram
