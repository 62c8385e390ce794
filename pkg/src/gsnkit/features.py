"""Structural identifiers: per-vertex and per-edge subgraph-orbit counts.

For a pattern H with vertex orbits O^V_1..O^V_d, the vertex identifier entry
x^V_{H,i}(v) counts the distinct subgraphs of G isomorphic to H in which v
occupies orbit O^V_i; the edge identifier x^E_{H,i}(u, v) does the same for
ordered adjacent pairs and edge orbits.  Which mapping "places" a vertex in
an orbit is immaterial: any two isomorphisms onto the same subgraph differ by
an automorphism of H, so orbit membership is a property of the subgraph.

Edge counts are stored per ordered pair.  Each edge-orbit dimension carries a
direction convention fixed by the orbit's representative edge: a count at
(u, v) says u sits at the representative's first endpoint.  Orbits whose
edges can be flipped by an automorphism are direction-blind and are stored
symmetrically; for the rest, (u, v) and (v, u) carry distinct information,
which is exactly what makes vertex identifiers recoverable from edge
identifiers (``reconstruct_vertex_from_edge``).

Counts are exact integers throughout; nothing here floats.
"""
from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from typing import IO, Sequence

import numpy as np

from .catalog import Collection, all_graphs_of_size
from .graphs import Graph, GraphError
from .matching import are_isomorphic, canonical_matches


@dataclass
class StructuralFeatures:
    """Vertex and edge identifier matrices for one graph.

    ``vertex_counts`` is n x D; ``edge_counts`` maps every ordered adjacent
    pair to a vector over edge-orbit dimensions.  Both parts are produced in
    one enumeration pass, so either accessor returns the full object.
    """

    vertex_counts: np.ndarray
    edge_counts: dict[tuple[int, int], np.ndarray]
    collection_ref: str
    counting_mode: str

    @property
    def num_vertices(self) -> int:
        return self.vertex_counts.shape[0]

    @property
    def num_vertex_dims(self) -> int:
        return self.vertex_counts.shape[1]

    def edge_pairs(self) -> list[tuple[int, int]]:
        """Ordered adjacent pairs in a deterministic (sorted) order."""
        return sorted(self.edge_counts)

    def edge_matrix(self) -> np.ndarray:
        """Edge counts stacked into a matrix, rows aligned with edge_pairs()."""
        pairs = self.edge_pairs()
        if not pairs:
            return np.zeros((0, 0), dtype=np.int64)
        return np.stack([self.edge_counts[p] for p in pairs])


@dataclass(frozen=True)
class _EdgeOrbitConvention:
    """Directed reading of one edge orbit.

    ``forward`` holds the ordered pattern pairs aligned with the orbit
    representative; first_dim/second_dim are global vertex-dimension indices
    of the representative's endpoints.  ``symmetric`` means some automorphism
    flips the representative, in which case forward is flip-closed and the
    stored counts are direction-blind.
    """

    first_dim: int
    second_dim: int
    symmetric: bool
    forward: frozenset


def _edge_conventions(C: Collection) -> list[list[_EdgeOrbitConvention]]:
    out = []
    voff = 0
    for pat in C.patterns:
        orb = pat.orbits
        per = []
        for edges in orb.edge_orbits:
            p, q = edges[0]
            forward = frozenset((a[p], a[q]) for a in orb.automorphisms)
            per.append(_EdgeOrbitConvention(
                first_dim=voff + orb.vertex_orbit_of[p],
                second_dim=voff + orb.vertex_orbit_of[q],
                symmetric=(q, p) in forward,
                forward=forward,
            ))
        out.append(per)
        voff += orb.d
    return out


def structural_features(
    G: Graph,
    C: Collection,
    deadline: float | None = None,
) -> StructuralFeatures:
    """Count vertex- and edge-orbit occurrences of every pattern in G.

    graphlet mode matches induced subgraphs (deduplicated by vertex set),
    motif mode matches arbitrary subgraphs (deduplicated by edge set).
    """
    induced = C.counting_mode == "graphlet"
    vmat = np.zeros((G.n, C.total_vertex_dims), dtype=np.int64)
    edims = C.total_edge_dims
    ec: dict[tuple[int, int], np.ndarray] = {}
    for u, v in G.edges:
        ec[(u, v)] = np.zeros(edims, dtype=np.int64)
        ec[(v, u)] = np.zeros(edims, dtype=np.int64)

    conventions = _edge_conventions(C)
    voff = eoff = 0
    for pat, convs in zip(C.patterns, conventions):
        H = pat.graph
        orb = pat.orbits
        orbit_of = orb.vertex_orbit_of
        eidx = orb.edge_orbit_of()
        for f in canonical_matches(
            H, G,
            induced=induced,
            allow_disconnected=C.allow_disconnected,
            automorphisms=orb.automorphisms,
            deadline=deadline,
        ):
            for h, gv in enumerate(f):
                vmat[gv, voff + orbit_of[h]] += 1
            for p, q in H.edges:
                o = eidx[(p, q)]
                conv = convs[o]
                a, b = f[p], f[q]
                if conv.symmetric:
                    ec[(a, b)][eoff + o] += 1
                    ec[(b, a)][eoff + o] += 1
                elif (p, q) in conv.forward:
                    ec[(a, b)][eoff + o] += 1
                else:
                    ec[(b, a)][eoff + o] += 1
        voff += orb.d
        eoff += orb.num_edge_orbits
    return StructuralFeatures(vmat, ec, C.describe(), C.counting_mode)


def vertex_features(
    G: Graph, C: Collection, deadline: float | None = None
) -> StructuralFeatures:
    """Vertex identifiers x^V (the edge part rides along at no extra search
    cost, so the full object is returned)."""
    return structural_features(G, C, deadline)


def edge_features(
    G: Graph, C: Collection, deadline: float | None = None
) -> StructuralFeatures:
    """Edge identifiers x^E for every ordered adjacent pair."""
    return structural_features(G, C, deadline)


def reconstruct_vertex_from_edge(
    feats: StructuralFeatures, C: Collection
) -> np.ndarray:
    """Recover the vertex identifier matrix from edge identifiers alone.

    Every subgraph placing v in orbit O^V_i contributes deg(O^V_i) edge-count
    units at v across the orbits incident to O^V_i, so summing incident edge
    counts at the right endpoint roles and dividing by the orbit degree
    returns x^V exactly.  Patterns with an isolated vertex are rejected: a
    degree-0 orbit leaves nothing to divide.
    """
    degs: list[int] = []
    for pat in C.patterns:
        if min(pat.orbits.orbit_degrees, default=1) == 0:
            raise GraphError(
                f"pattern {pat.family}{pat.size} has an isolated vertex; "
                "its vertex identifiers leave no trace on edges"
            )
        degs.extend(pat.orbits.orbit_degrees)
    deg = np.array(degs, dtype=np.int64)

    flat = [c for per in _edge_conventions(C) for c in per]
    first = np.array([c.first_dim for c in flat], dtype=np.intp)
    second = np.array([c.second_dim for c in flat], dtype=np.intp)
    asym = np.array([not c.symmetric for c in flat], dtype=bool)
    second_asym = second[asym]

    acc = np.zeros((feats.num_vertices, len(deg)), dtype=np.int64)
    for (a, b), vec in feats.edge_counts.items():
        np.add.at(acc, (a, first), vec)
        if second_asym.size:
            np.add.at(acc, (b, second_asym), vec[asym])
    quot, rem = np.divmod(acc, deg) if len(deg) else (acc, acc)
    if rem.any():
        raise GraphError("edge counts admit no consistent vertex attribution")
    return quot


def prefix_features(
    feats: StructuralFeatures, C: Collection, num_patterns: int
) -> tuple[StructuralFeatures, Collection]:
    """Restrict computed features to the first num_patterns patterns.

    Dimensions are concatenated in pattern order, so a pattern prefix is a
    column prefix of both parts; counting once at the largest collection and
    slicing covers every smaller collection of the same family.
    """
    if not 0 <= num_patterns <= len(C.patterns):
        raise GraphError(
            f"cannot take {num_patterns} patterns from {len(C.patterns)}"
        )
    pats = list(C.patterns[:num_patterns])
    vw = sum(p.orbits.d for p in pats)
    ew = sum(p.orbits.num_edge_orbits for p in pats)
    sub = Collection(pats, C.counting_mode, C.allow_disconnected)
    sliced = StructuralFeatures(
        feats.vertex_counts[:, :vw].copy(),
        {pair: vec[:ew].copy() for pair, vec in feats.edge_counts.items()},
        sub.describe(),
        C.counting_mode,
    )
    return sliced, sub


def identifier_multisets_equal(
    F1: StructuralFeatures, F2: StructuralFeatures, part: str = "vertex"
) -> bool:
    """Order-free comparison of two graphs' identifier rows; unequal
    multisets certify non-isomorphism before any encoder runs."""
    if part == "vertex":
        a, b = F1.vertex_counts, F2.vertex_counts
    elif part == "edge":
        a, b = F1.edge_matrix(), F2.edge_matrix()
    else:
        raise GraphError(f"unknown identifier part {part!r}")
    if a.shape != b.shape:
        return False
    return sorted(map(tuple, a.tolist())) == sorted(map(tuple, b.tolist()))


def deck_check(G: Graph) -> bool:
    """Verify that identifier totals encode the multiset of vertex-deleted
    subgraphs: for every pattern H_j on n-1 vertices, the grand total of
    x^V_{H_j} over G equals (n-1) times the number of cards isomorphic to
    H_j.  The card multiplicities are established independently, by deleting
    each vertex and classifying the remainder.
    """
    n = G.n
    if not 4 <= n <= 8:
        raise GraphError(f"deck check supports 4 <= n <= 8, got n={n}")
    G = Graph(n, G.edges)  # the identity is structural; drop labels
    C = all_graphs_of_size(n - 1)
    totals = structural_features(G, C).vertex_counts.sum(axis=0)
    deck = [G.delete_vertex(v) for v in range(n)]
    voff = 0
    for pat in C.patterns:
        grand = int(totals[voff:voff + pat.orbits.d].sum())
        mult = sum(1 for card in deck if are_isomorphic(card, pat.graph))
        if grand != (n - 1) * mult:
            return False
        voff += pat.orbits.d
    return True


# ──────────────────────────────────────────────────────────────────────
# One-hot encoding over a dataset-wide vocabulary
# ──────────────────────────────────────────────────────────────────────

@dataclass
class EncodedIdentifiers:
    """One-hot encoded identifiers plus the vocabulary that produced them.

    vocabulary[d] lists the distinct count values seen in dimension d,
    ascending; encoded[g] is the per-row concatenation of one-hot blocks for
    graph g (one row per vertex, or per ordered pair for the edge part).
    """

    vocabulary: list[tuple[int, ...]]
    encoded: list[np.ndarray]

    @property
    def width(self) -> int:
        return sum(len(v) for v in self.vocabulary)


def build_vocabulary(matrices: Sequence[np.ndarray]) -> list[tuple[int, ...]]:
    """Per-dimension sorted distinct values across a dataset of count
    matrices (all matrices must share their width)."""
    if not matrices:
        raise GraphError("cannot build a vocabulary from no matrices")
    dims = matrices[0].shape[1]
    for m in matrices:
        if m.shape[1] != dims:
            raise GraphError("feature widths disagree across the dataset")
    return [
        tuple(sorted({int(x) for m in matrices for x in m[:, d]}))
        for d in range(dims)
    ]


def apply_vocabulary(
    matrix: np.ndarray, vocabulary: Sequence[tuple[int, ...]]
) -> np.ndarray:
    """One-hot encode a count matrix against a frozen vocabulary.

    A value absent from its dimension's vocabulary is a contract violation
    (the vocabulary must come from the same dataset, or be applied only to
    graphs it covers) and raises with the offending dimension and value.
    """
    if matrix.shape[1] != len(vocabulary):
        raise GraphError(
            f"matrix has {matrix.shape[1]} dimensions, "
            f"vocabulary covers {len(vocabulary)}"
        )
    out = np.zeros(
        (matrix.shape[0], sum(len(v) for v in vocabulary)), dtype=np.int64
    )
    off = 0
    for d, vocab in enumerate(vocabulary):
        index = {val: i for i, val in enumerate(vocab)}
        for r in range(matrix.shape[0]):
            val = int(matrix[r, d])
            if val not in index:
                raise GraphError(
                    f"count {val} in dimension {d} is outside the frozen "
                    f"vocabulary {list(vocab)}"
                )
            out[r, off + index[val]] = 1
        off += len(vocab)
    return out


def one_hot_encode(
    features: Sequence[StructuralFeatures], part: str = "vertex"
) -> EncodedIdentifiers:
    """Encode a dataset's identifiers against a shared vocabulary.

    part="vertex" encodes the n x D matrices; part="edge" encodes the
    per-ordered-pair vectors, rows following edge_pairs() order.
    """
    if part == "vertex":
        mats = [f.vertex_counts for f in features]
    elif part == "edge":
        mats = [f.edge_matrix() for f in features]
    else:
        raise GraphError(f"unknown identifier part {part!r}")
    vocab = build_vocabulary(mats)
    return EncodedIdentifiers(vocab, [apply_vocabulary(m, vocab) for m in mats])


def disambiguation_score(
    graphs: Sequence[Graph],
    C: Collection,
    deadline: float | None = None,
) -> float:
    """Fraction of vertices made unique within their graph by the pair
    (input label, identifier row); unlabeled graphs count labels as uniform.
    """
    if not graphs:
        raise GraphError("disambiguation score of an empty dataset")
    unique_total = 0
    vertex_total = 0
    for G in graphs:
        vmat = structural_features(G, C, deadline=deadline).vertex_counts
        seen = set()
        for v in range(G.n):
            lab = G.vertex_labels[v] if G.vertex_labels is not None else 0
            seen.add((lab, *vmat[v].tolist()))
        unique_total += len(seen)
        vertex_total += G.n
    if vertex_total == 0:
        raise GraphError("dataset has no vertices")
    return unique_total / vertex_total


# ──────────────────────────────────────────────────────────────────────
# Export
# ──────────────────────────────────────────────────────────────────────

def _pattern_names(C: Collection) -> list[str]:
    base = [f"{p.family}{p.size}" for p in C.patterns]
    counts: dict[str, int] = {}
    names = []
    for b in base:
        k = counts.get(b, 0)
        counts[b] = k + 1
        names.append(b if base.count(b) == 1 else f"{b}.{k}")
    return names


def vertex_dimension_names(C: Collection) -> list[str]:
    return [
        f"{name}:v{i}"
        for name, p in zip(_pattern_names(C), C.patterns)
        for i in range(p.orbits.d)
    ]


def edge_dimension_names(C: Collection) -> list[str]:
    return [
        f"{name}:e{i}"
        for name, p in zip(_pattern_names(C), C.patterns)
        for i in range(p.orbits.num_edge_orbits)
    ]


def write_vertex_features_csv(
    out: IO[str],
    features: Sequence[StructuralFeatures],
    C: Collection,
    graph_ids: Sequence[str] | None = None,
) -> None:
    """One row per vertex: graph_id, vertex_id, then one column per
    identifier dimension."""
    ids = graph_ids or [str(i) for i in range(len(features))]
    if len(ids) != len(features):
        raise GraphError("graph_ids and features lengths differ")
    w = csv.writer(out)
    w.writerow(["graph_id", "vertex_id", *vertex_dimension_names(C)])
    for gid, f in zip(ids, features):
        for v in range(f.num_vertices):
            w.writerow([gid, v, *f.vertex_counts[v].tolist()])


def features_to_json_obj(
    features: Sequence[StructuralFeatures],
    C: Collection,
    graph_ids: Sequence[str] | None = None,
) -> dict:
    """Self-describing JSON: the collection spec plus per-graph counts."""
    ids = graph_ids or [str(i) for i in range(len(features))]
    if len(ids) != len(features):
        raise GraphError("graph_ids and features lengths differ")
    return {
        "collection": C.to_json_obj(),
        "vertex_dimensions": vertex_dimension_names(C),
        "edge_dimensions": edge_dimension_names(C),
        "graphs": [
            {
                "graph_id": gid,
                "vertex_counts": f.vertex_counts.tolist(),
                "edge_counts": [
                    [u, v, f.edge_counts[(u, v)].tolist()]
                    for (u, v) in f.edge_pairs()
                ],
            }
            for gid, f in zip(ids, features)
        ],
    }


def vocabulary_to_json(vocabulary: Sequence[tuple[int, ...]]) -> str:
    return json.dumps([list(v) for v in vocabulary])


def vocabulary_from_json(text: str) -> list[tuple[int, ...]]:
    obj = json.loads(text)
    if not isinstance(obj, list):
        raise GraphError("vocabulary JSON must be a list of lists")
    return [tuple(int(x) for x in row) for row in obj]
