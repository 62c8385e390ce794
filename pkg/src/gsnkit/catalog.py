"""Substructure collections: cycles, paths, cliques, trees, stars, and the
set of all graphs of a fixed size, each packaged with precomputed orbits."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .graphs import Graph, GraphError, graph_from_edges
from .matching import OrbitPartition, are_isomorphic, canonical_code, \
    compute_orbits

FAMILIES = ("cycle", "path", "clique", "tree", "star", "custom", "all-graphs")
COUNTING_MODES = ("graphlet", "motif")
TREE_SIZE_CAP = 12
ALL_GRAPHS_CAP = 7
# number of nonisomorphic trees on 1..12 vertices
_TREE_COUNTS = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551)
# number of nonisomorphic simple graphs on 1..7 vertices
_GRAPH_COUNTS = (1, 2, 4, 11, 34, 156, 1044)


@dataclass(frozen=True)
class SubstructurePattern:
    """A small pattern graph H with its vertex/edge orbit structure."""

    graph: Graph
    orbits: OrbitPartition
    family: str
    size: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise GraphError(f"unknown pattern family {self.family!r}")
        if self.size != self.graph.n:
            raise GraphError("pattern size disagrees with its graph")


def make_pattern(G: Graph, family: str) -> SubstructurePattern:
    return SubstructurePattern(G, compute_orbits(G), family, G.n)


@dataclass
class Collection:
    """Ordered list of pairwise non-isomorphic patterns plus counting mode.

    The vertex feature width D is the total number of vertex orbits across
    patterns; edge features concatenate edge orbits the same way.
    """

    patterns: list[SubstructurePattern]
    counting_mode: str = "graphlet"
    allow_disconnected: bool = False
    _validated: bool = field(default=False, repr=False)

    def __post_init__(self) -> None:
        if self.counting_mode not in COUNTING_MODES:
            raise GraphError(f"unknown counting mode {self.counting_mode!r}")
        for i, p in enumerate(self.patterns):
            for q in self.patterns[i + 1:]:
                if p.size == q.size and are_isomorphic(p.graph, q.graph):
                    raise GraphError("collection contains isomorphic patterns")

    @property
    def total_vertex_dims(self) -> int:
        return sum(p.orbits.d for p in self.patterns)

    @property
    def total_edge_dims(self) -> int:
        return sum(p.orbits.num_edge_orbits for p in self.patterns)

    def describe(self) -> str:
        if not self.patterns:
            return f"empty ({self.counting_mode}, D=0)"
        fams = sorted({p.family for p in self.patterns})
        sizes = sorted({p.size for p in self.patterns})
        return (f"{'+'.join(fams)} sizes {min(sizes)}..{max(sizes)} "
                f"({self.counting_mode}, D={self.total_vertex_dims})")

    def to_json_obj(self) -> dict:
        return {
            "counting_mode": self.counting_mode,
            "allow_disconnected": self.allow_disconnected,
            "patterns": [
                {
                    "family": p.family,
                    "n": p.graph.n,
                    "edges": sorted(p.graph.edges),
                    "vertex_orbits": [sorted(o) for o in p.orbits.vertex_orbits],
                    "edge_orbits": [sorted(o) for o in p.orbits.edge_orbits],
                }
                for p in self.patterns
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=1, sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "Collection":
        obj = json.loads(text)
        pats = []
        for rec in obj["patterns"]:
            g = graph_from_edges(rec["n"], [tuple(e) for e in rec["edges"]])
            pats.append(make_pattern(g, rec["family"]))
        return Collection(pats, obj["counting_mode"],
                          obj.get("allow_disconnected", False))


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise GraphError("cycles need at least 3 vertices")
    return graph_from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    if k < 2:
        raise GraphError("paths need at least 2 vertices")
    return graph_from_edges(k, [(i, i + 1) for i in range(k - 1)])


def clique_graph(k: int) -> Graph:
    if k < 2:
        raise GraphError("cliques need at least 2 vertices")
    return graph_from_edges(
        k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def star_graph(k: int) -> Graph:
    """Star on k vertices: one center joined to k-1 leaves."""
    if k < 2:
        raise GraphError("stars need at least 2 vertices")
    return graph_from_edges(k, [(0, i) for i in range(1, k)])


def nonisomorphic_trees(k: int) -> list[Graph]:
    if k > TREE_SIZE_CAP:
        raise GraphError(f"tree size cap is {TREE_SIZE_CAP} (got {k})")
    if k == 1:
        return [graph_from_edges(1, [])]
    import networkx as nx

    out = [graph_from_edges(k, sorted(t.edges()))
           for t in nx.nonisomorphic_trees(k)]
    if len(out) != _TREE_COUNTS[k - 1]:
        raise GraphError(
            f"tree enumeration for size {k} produced {len(out)} trees, "
            f"expected {_TREE_COUNTS[k - 1]}")
    return out


def family_collection(family: str, k_max: int,
                      counting_mode: str = "graphlet") -> Collection:
    """All members of one pattern family with size <= k_max."""
    lo = {"cycle": 3, "clique": 3, "path": 2, "tree": 2, "star": 2}
    if family not in lo:
        raise GraphError(f"no generator for pattern family {family!r}")
    if k_max < lo[family]:
        raise GraphError(f"{family} collections need k_max >= {lo[family]}")
    sizes = range(lo[family], k_max + 1)
    if family == "cycle":
        graphs = [cycle_graph(k) for k in sizes]
    elif family == "clique":
        graphs = [clique_graph(k) for k in sizes]
    elif family == "path":
        graphs = [path_graph(k) for k in sizes]
    elif family == "star":
        graphs = [star_graph(k) for k in sizes]
    else:
        graphs = [t for k in sizes for t in nonisomorphic_trees(k)]
    graphs.sort(key=lambda g: (g.n, canonical_code(g)))
    return Collection([make_pattern(g, family) for g in graphs],
                      counting_mode)


def all_graphs_of_size(m: int, counting_mode: str = "graphlet") -> Collection:
    """Every simple graph on m vertices up to isomorphism, disconnected
    ones included (the deck identity quantifies over all of them)."""
    if not 1 <= m <= ALL_GRAPHS_CAP:
        raise GraphError(f"all-graphs size must be in 1..{ALL_GRAPHS_CAP}")
    from networkx.generators.atlas import graph_atlas_g

    graphs = [graph_from_edges(m, sorted(g.edges()))
              for g in graph_atlas_g() if g.number_of_nodes() == m]
    if len(graphs) != _GRAPH_COUNTS[m - 1]:
        raise GraphError(
            f"atlas enumeration for size {m} produced {len(graphs)} graphs, "
            f"expected {_GRAPH_COUNTS[m - 1]}")
    graphs.sort(key=lambda g: (g.m, canonical_code(g)))
    return Collection([make_pattern(g, "all-graphs") for g in graphs],
                      counting_mode, allow_disconnected=True)
