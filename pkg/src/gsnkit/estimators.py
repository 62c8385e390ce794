"""Scikit-learn style wrappers: fit freezes collections/vocabularies/weights
over a dataset, transform maps graphs to identifier matrices or fixed
random-weight representations."""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from .catalog import family_collection
from .encoder import EncoderConfig, build_context, encode
from .features import apply_vocabulary, build_vocabulary, structural_features
from .graphs import GraphError


class StructuralFeatureTransformer(BaseEstimator, TransformerMixin):
    """Per-vertex (or per-ordered-pair) substructure-orbit count matrices.

    fit() freezes the pattern collection and, when one_hot is set, the count
    vocabulary observed on the fitted dataset; transform() then maps each
    graph to its count matrix (rows = vertices, or ordered adjacent pairs for
    part="edge").  Output is a list of arrays since graphs vary in size.
    """

    def __init__(self, family="cycle", k_max=6, counting_mode="graphlet",
                 part="vertex", one_hot=False):
        self.family = family
        self.k_max = k_max
        self.counting_mode = counting_mode
        self.part = part
        self.one_hot = one_hot

    def _matrices(self, X):
        feats = [structural_features(G, self.collection_) for G in X]
        if self.part == "vertex":
            return [f.vertex_counts for f in feats]
        if self.part == "edge":
            return [f.edge_matrix() for f in feats]
        raise GraphError(f"unknown part {self.part!r}")

    def fit(self, X, y=None):
        self.collection_ = family_collection(
            self.family, self.k_max, self.counting_mode
        )
        if self.one_hot:
            self.vocabulary_ = build_vocabulary(self._matrices(X))
        return self

    def transform(self, X):
        if not hasattr(self, "collection_"):
            raise GraphError("transformer is not fitted")
        mats = self._matrices(X)
        if self.one_hot:
            mats = [apply_vocabulary(m, self.vocabulary_) for m in mats]
        return mats


class GSNGraphEncoder(BaseEstimator, TransformerMixin):
    """Graph-level representations from a frozen random-weight encoder.

    fit() freezes the substructure collection, the one-hot vocabularies over
    the fitted dataset, and (implicitly, through the seed and the resulting
    input widths) the weights; transform() returns a (len(X), width) array.
    Graphs whose counts or labels fall outside the fitted vocabularies are
    rejected, as the encoder has no input slot for them.
    """

    def __init__(self, variant="gsn_v", family="cycle", k_max=6,
                 counting_mode="graphlet", layers=2, width=64, mlp_depth=2,
                 seed=0, epsilon=1e-3):
        self.variant = variant
        self.family = family
        self.k_max = k_max
        self.counting_mode = counting_mode
        self.layers = layers
        self.width = width
        self.mlp_depth = mlp_depth
        self.seed = seed
        self.epsilon = epsilon

    def _features(self, X):
        if self.variant == "mpnn":
            return [None] * len(X)
        return [structural_features(G, self.collection_) for G in X]

    def fit(self, X, y=None):
        self.config_ = EncoderConfig(
            variant=self.variant, layers=self.layers, width=self.width,
            mlp_depth=self.mlp_depth, seed=self.seed, epsilon=self.epsilon,
        )
        self.collection_ = family_collection(
            self.family, self.k_max, self.counting_mode
        )
        feats = self._features(X)
        self.context_ = build_context(
            list(X), None if self.variant == "mpnn" else feats, self.variant
        )
        return self

    def transform(self, X):
        if not hasattr(self, "context_"):
            raise GraphError("encoder is not fitted")
        feats = self._features(X)
        return np.vstack([
            encode(G, F, self.config_, self.context_).vector
            for G, F in zip(X, feats)
        ])
