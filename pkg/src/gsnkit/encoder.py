"""Random-weight message-passing encoders and the ε-threshold pair test.

Three variants share one forward pass: plain message passing (mpnn), messages
augmented with the two endpoints' vertex identifiers (gsn_v), and messages
augmented with the directed edge identifier (gsn_e).  Weights are drawn once
from a seeded generator and never trained; the encoder is a fixed random
function whose only job is to separate graphs whose identifier-augmented
structure differs.

Bit-exact permutation invariance: floating-point addition is commutative but
not associative, so summing messages (or the readout) in vertex-index order
would leak the labeling into the low bits.  Every multiset sum here first
sorts its addend rows lexicographically by content; equal rows commute
exactly, so the accumulated value is independent of vertex numbering, and
the fixed order keeps repeated runs bit-identical too.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .features import StructuralFeatures, apply_vocabulary, build_vocabulary
from .graphs import Graph, GraphError

VARIANTS = ("mpnn", "gsn_v", "gsn_e")


@dataclass(frozen=True)
class EncoderConfig:
    variant: str = "gsn_v"
    layers: int = 2
    width: int = 64
    mlp_depth: int = 2
    seed: int = 0
    epsilon: float = 1e-3
    readout: str = "sum"

    def __post_init__(self) -> None:
        if self.variant not in VARIANTS:
            raise GraphError(f"unknown variant {self.variant!r}")
        if self.layers < 1 or self.width < 1 or self.mlp_depth < 1:
            raise GraphError("layers, width, and mlp_depth must be >= 1")
        if not self.epsilon > 0:
            raise GraphError("epsilon must be positive")
        if self.readout != "sum":
            raise GraphError("only the sum readout is supported")


@dataclass(frozen=True)
class Representation:
    vector: np.ndarray
    graph_id: str | None = None


@dataclass(frozen=True)
class EncodingContext:
    """Frozen vocabularies shared by every graph in one comparison.

    identifier_vocab one-hot encodes the structural counts; the label value
    tuples do the same for input vertex/edge labels (None means the graphs
    are unlabeled and a constant input is used instead).
    """

    identifier_vocab: tuple[tuple[int, ...], ...] | None
    vertex_label_values: tuple[int, ...] | None
    edge_label_values: tuple[int, ...] | None


def build_context(
    graphs: Sequence[Graph],
    features: Sequence[StructuralFeatures] | None,
    variant: str,
) -> EncodingContext:
    """Collect the value vocabularies of a compared set of graphs."""
    if variant not in VARIANTS:
        raise GraphError(f"unknown variant {variant!r}")
    idvocab = None
    if variant != "mpnn":
        if features is None or len(features) != len(graphs):
            raise GraphError(f"variant {variant} needs features per graph")
        if variant == "gsn_v":
            mats = [f.vertex_counts for f in features]
        else:
            mats = [f.edge_matrix() for f in features]
        idvocab = tuple(build_vocabulary(mats))
    vlabs = None
    if any(G.vertex_labels is not None for G in graphs):
        vals: set[int] = set()
        for G in graphs:
            vals.update(G.vertex_labels or [0] * G.n)
        vlabs = tuple(sorted(vals))
    elabs = None
    if any(G.edge_labels is not None for G in graphs):
        evals: set[int] = set()
        for G in graphs:
            m = G.edge_label_map()
            evals.update(m[e] if m else 0 for e in G.edges)
            if not m:
                evals.add(0)
        elabs = tuple(sorted(evals))
    return EncodingContext(idvocab, vlabs, elabs)


# ──────────────────────────────────────────────────────────────────────
# Weights
# ──────────────────────────────────────────────────────────────────────

def _draw_mlp(rng: np.random.Generator, dims: list[int]) -> list[np.ndarray]:
    mats = []
    for fan_in, fan_out in zip(dims, dims[1:]):
        a = np.sqrt(6.0 / (fan_in + fan_out))
        mats.append(rng.uniform(-a, a, size=(fan_in, fan_out)))
    return mats


def _mlp(x: np.ndarray, mats: Sequence[np.ndarray]) -> np.ndarray:
    for i, W in enumerate(mats):
        x = x @ W
        if i + 1 < len(mats):
            x = np.maximum(x, 0.0)
    return x


def _mlp_dims(fan_in: int, width: int, depth: int) -> list[int]:
    return [fan_in] + [width] * depth


def _draw_weights(cfg: EncoderConfig, h0: int, x_extra: int, e_w: int):
    """All weight matrices, in a fixed draw order: per layer the message MLP
    then the update MLP, finally the readout MLP."""
    rng = np.random.default_rng(cfg.seed)
    w = cfg.width
    layers = []
    h = h0
    for _ in range(cfg.layers):
        msg = _draw_mlp(rng, _mlp_dims(2 * h + x_extra + e_w, w, cfg.mlp_depth))
        up = _draw_mlp(rng, _mlp_dims(h + w, w, cfg.mlp_depth))
        layers.append((msg, up))
        h = w
    readout = _draw_mlp(rng, _mlp_dims(w, w, cfg.mlp_depth))
    return layers, readout


# ──────────────────────────────────────────────────────────────────────
# Forward pass
# ──────────────────────────────────────────────────────────────────────

def _canonical_rowsum(rows: np.ndarray) -> np.ndarray:
    """Sum rows in lexicographic content order (labeling-independent)."""
    if rows.shape[0] == 0:
        return np.zeros(rows.shape[1])
    order = np.lexsort(rows.T[::-1])
    total = np.zeros(rows.shape[1])
    for i in order:
        total = total + rows[i]
    return total


def _initial_h(G: Graph, ctx: EncodingContext) -> np.ndarray:
    if ctx.vertex_label_values is None:
        return np.ones((G.n, 1))
    index = {v: i for i, v in enumerate(ctx.vertex_label_values)}
    labels = G.vertex_labels or tuple([0] * G.n)
    H = np.zeros((G.n, len(index)))
    for v, lab in enumerate(labels):
        if lab not in index:
            raise GraphError(
                f"vertex label {lab} is outside the frozen label vocabulary"
            )
        H[v, index[lab]] = 1.0
    return H


def _edge_label_block(G: Graph, ctx: EncodingContext) -> dict | None:
    if ctx.edge_label_values is None:
        return None
    index = {v: i for i, v in enumerate(ctx.edge_label_values)}
    m = G.edge_label_map()
    out = {}
    for u, v in G.edges:
        lab = m.get((u, v), 0)
        if lab not in index:
            raise GraphError(
                f"edge label {lab} is outside the frozen label vocabulary"
            )
        block = np.zeros(len(index))
        block[index[lab]] = 1.0
        out[(u, v)] = out[(v, u)] = block
    return out


def encode(
    G: Graph,
    F: StructuralFeatures | None,
    cfg: EncoderConfig,
    context: EncodingContext | None = None,
    graph_id: str | None = None,
) -> Representation:
    """Forward pass: h'_v = UP(h_v, Σ_{u∈N(v)} MSG(h_v, h_u [, x][, e])),
    repeated cfg.layers times, then a readout MLP on the canonical vertex
    sum.  Pass the context built over all compared graphs so their one-hot
    encodings agree; omitting it freezes vocabularies on this graph alone.
    """
    if cfg.variant != "mpnn" and F is None:
        raise GraphError(f"variant {cfg.variant} requires structural features")
    if context is None:
        context = build_context([G], None if F is None else [F], cfg.variant)

    H = _initial_h(G, context)
    elab = _edge_label_block(G, context)
    e_w = 0 if elab is None else len(context.edge_label_values)

    xv = None
    xe = None
    x_extra = 0
    if cfg.variant == "gsn_v":
        xv = apply_vocabulary(F.vertex_counts, context.identifier_vocab)
        xv = xv.astype(float)
        x_extra = 2 * xv.shape[1]
    elif cfg.variant == "gsn_e":
        pairs = F.edge_pairs()
        mat = apply_vocabulary(F.edge_matrix(), context.identifier_vocab)
        xe = {p: mat[i].astype(float) for i, p in enumerate(pairs)}
        x_extra = mat.shape[1]

    layer_mats, readout_mats = _draw_weights(cfg, H.shape[1], x_extra, e_w)

    for msg_mats, up_mats in layer_mats:
        new_H = np.empty((G.n, cfg.width))
        for v in range(G.n):
            nbrs = G.neighbors[v]
            if nbrs:
                parts = []
                for u in nbrs:
                    row = [H[v], H[u]]
                    if xv is not None:
                        row += [xv[v], xv[u]]
                    elif xe is not None:
                        row.append(xe[(u, v)])
                    if elab is not None:
                        row.append(elab[(u, v)])
                    parts.append(np.concatenate(row))
                msgs = _mlp(np.stack(parts), msg_mats)
                m_v = _canonical_rowsum(msgs)
            else:
                m_v = np.zeros(cfg.width)
            new_H[v] = _mlp(np.concatenate([H[v], m_v]), up_mats)
        H = new_H
        if not np.isfinite(H).all():
            raise GraphError("non-finite values in the forward pass")

    vec = _mlp(_canonical_rowsum(H), readout_mats)
    if not np.isfinite(vec).all():
        raise GraphError("non-finite representation")
    return Representation(vec, graph_id)


# ──────────────────────────────────────────────────────────────────────
# Pair test
# ──────────────────────────────────────────────────────────────────────

def representation_distance(
    r1: Representation, r2: Representation, n1: int, n2: int
) -> float:
    """Euclidean distance between vertex-count-normalized representations."""
    return float(np.linalg.norm(r1.vector / n1 - r2.vector / n2))


def gsn_isomorphism_test(
    G1: Graph,
    G2: Graph,
    F1: StructuralFeatures | None,
    F2: StructuralFeatures | None,
    cfg: EncoderConfig,
) -> bool:
    """True = deemed non-isomorphic: normalized representation distance
    exceeds ε under weights and vocabularies shared by the pair."""
    if G1.n != G2.n:
        return True
    feats = None if cfg.variant == "mpnn" else [F1, F2]
    ctx = build_context([G1, G2], feats, cfg.variant)
    r1 = encode(G1, F1, cfg, ctx)
    r2 = encode(G2, F2, cfg, ctx)
    return representation_distance(r1, r2, G1.n, G2.n) > cfg.epsilon


def gsn_isomorphism_test_multiseed(
    G1: Graph,
    G2: Graph,
    F1: StructuralFeatures | None,
    F2: StructuralFeatures | None,
    cfg: EncoderConfig,
    seeds: Sequence[int] = (0, 1, 2),
) -> bool:
    """Run the pair test under several weight draws; any separating seed
    settles non-isomorphism (a single draw can accidentally collapse
    genuinely different features)."""
    return any(
        gsn_isomorphism_test(G1, G2, F1, F2, replace(cfg, seed=s))
        for s in seeds
    )
