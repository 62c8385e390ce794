"""Shared fixtures and independent oracles.

The oracles here are deliberately naive re-derivations — itertools
permutation scans and networkx matchers — so the package's counting,
orbit, and refinement code is checked against code that shares nothing
with it.
"""
from __future__ import annotations

import random
from itertools import combinations, permutations

import networkx as nx
import pytest
from hypothesis import strategies as st

from gsnkit.graphs import Graph


# ──────────────────────────────────────────────────────────────────────
# Brute-force oracles (itertools; no shared code with gsnkit.matching)
# ──────────────────────────────────────────────────────────────────────

def brute_maps(H: Graph, G: Graph, induced: bool) -> list[tuple[int, ...]]:
    """All injective maps H -> G preserving edges (and non-edges when
    induced), found by scanning every placement."""
    h_edges = {frozenset(e) for e in H.edges}
    out = []
    for img in permutations(range(G.n), H.n):
        ok = True
        for u in range(H.n):
            for v in range(u + 1, H.n):
                he = frozenset((u, v)) in h_edges
                ge = G.has_edge(img[u], img[v])
                if he and not ge:
                    ok = False
                    break
                if induced and ge and not he:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(img)
    return out


def brute_distinct(H: Graph, G: Graph, induced: bool) -> int:
    """Distinct subgraphs: by vertex set when induced, by mapped edge set
    otherwise."""
    seen = set()
    for img in brute_maps(H, G, induced):
        if induced:
            seen.add(frozenset(img))
        else:
            seen.add(frozenset(
                frozenset((img[u], img[v])) for u, v in H.edges
            ))
    return len(seen)


def brute_vertex_orbits(H: Graph) -> list[frozenset[int]]:
    """Vertex orbits of Aut(H) from the permutation scan, ordered by
    smallest member."""
    autos = brute_maps(H, H, induced=True)
    parent = list(range(H.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in autos:
        for v in range(H.n):
            ru, rv = find(v), find(a[v])
            if ru != rv:
                parent[ru] = rv
    groups: dict[int, set[int]] = {}
    for v in range(H.n):
        groups.setdefault(find(v), set()).add(v)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def brute_vertex_counts(
    H: Graph, G: Graph, induced: bool
) -> dict[frozenset[int], list[int]]:
    """Per G-vertex subgraph counts keyed by H vertex orbit.

    Each distinct subgraph contributes once per (vertex, orbit) role it
    realizes, matching the deduplicated counting contract.
    """
    orbits = brute_vertex_orbits(H)
    which = {v: o for o in orbits for v in o}
    per_sub: dict = {}
    for img in brute_maps(H, G, induced):
        key = (frozenset(img) if induced else frozenset(
            frozenset((img[u], img[v])) for u, v in H.edges
        ))
        roles = per_sub.setdefault(key, set())
        for hv in range(H.n):
            roles.add((img[hv], which[hv]))
    counts = {o: [0] * G.n for o in orbits}
    for roles in per_sub.values():
        for gv, o in roles:
            counts[o][gv] += 1
    return counts


# ──────────────────────────────────────────────────────────────────────
# networkx oracles (independent matcher implementation)
# ──────────────────────────────────────────────────────────────────────

def to_nx(G: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(G.edges)
    return g


def nx_map_count(H: Graph, G: Graph, induced: bool) -> int:
    gm = nx.algorithms.isomorphism.GraphMatcher(to_nx(G), to_nx(H))
    it = (gm.subgraph_isomorphisms_iter() if induced
          else gm.subgraph_monomorphisms_iter())
    return sum(1 for _ in it)


def nx_isomorphic(G1: Graph, G2: Graph) -> bool:
    return nx.is_isomorphic(to_nx(G1), to_nx(G2))


# ──────────────────────────────────────────────────────────────────────
# Random graphs and hypothesis strategies
# ──────────────────────────────────────────────────────────────────────

def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph(n, tuple(edges))


@st.composite
def graph_strategy(draw, min_n=1, max_n=8, labeled=False):
    n = draw(st.integers(min_n, max_n))
    all_pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(all_pairs),
                         max_size=len(all_pairs)))
    edges = tuple(e for e, keep in zip(all_pairs, mask) if keep)
    labels = None
    if labeled:
        labels = tuple(draw(st.lists(st.integers(0, 2), min_size=n,
                                     max_size=n)))
    return Graph(n, edges, vertex_labels=labels)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)


# Acceptance verdicts collected by tests/test_acceptance.py; echoed at the
# end of the run so each criterion shows one PASS/FAIL line.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
