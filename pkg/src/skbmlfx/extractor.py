"""Multi-level feature extractor: intermediate map, visual/semantic
autoencoders, level-wise extraction, and nearest-prototype classification."""

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, EmptyAllowedSet, UnknownClass
from .numkernel import check_matrix, check_vector, eigh_sym, pinv, row_space_projection, sylvester_spd


@dataclass(frozen=True)
class SemanticPrototypes:
    """Per-class semantic vectors; column c of ``vectors`` belongs to
    ``class_ids[c]``."""

    class_ids: tuple
    vectors: np.ndarray

    def __post_init__(self):
        vectors = check_matrix(self.vectors, "prototypes")
        object.__setattr__(self, "vectors", vectors)
        object.__setattr__(self, "class_ids", tuple(int(c) for c in self.class_ids))
        if len(set(self.class_ids)) != len(self.class_ids):
            raise DimensionMismatch("prototype class ids must be unique")
        if vectors.shape[1] != len(self.class_ids):
            raise DimensionMismatch("prototype column count != number of class ids")
        object.__setattr__(self, "_index", {c: i for i, c in enumerate(self.class_ids)})

    @property
    def dim(self):
        return self.vectors.shape[0]

    def vector_for(self, class_id):
        try:
            return self.vectors[:, self._index[int(class_id)]]
        except KeyError:
            raise UnknownClass(f"class {class_id} has no prototype") from None


@dataclass(frozen=True)
class TrainingSet:
    """Visual features (D_v x N), labels (N,), semantic columns (D_s x N)
    where column n holds the prototype of labels[n]."""

    visual: np.ndarray
    labels: np.ndarray
    semantic: np.ndarray

    def __post_init__(self):
        visual = check_matrix(self.visual, "visual")
        semantic = check_matrix(self.semantic, "semantic")
        labels = np.asarray(self.labels, dtype=np.int64)
        if labels.ndim != 1:
            raise DimensionMismatch("labels must be 1-d")
        if visual.shape[1] != labels.size or semantic.shape[1] != labels.size:
            raise DimensionMismatch("visual/semantic column counts must match label count")
        object.__setattr__(self, "visual", visual)
        object.__setattr__(self, "semantic", semantic)
        object.__setattr__(self, "labels", labels)

    @property
    def n(self):
        return self.labels.size

    @property
    def d_v(self):
        return self.visual.shape[0]

    @property
    def d_s(self):
        return self.semantic.shape[0]


@dataclass(frozen=True)
class ExtractorModel:
    """Trained maps: intermediate (w_s, w_v), visual encoder p_v, semantic
    encoder p_s, with dimensions and the relaxation weight."""

    w_s: np.ndarray
    w_v: np.ndarray
    p_v: np.ndarray
    p_s: np.ndarray
    k: int
    d_v: int
    d_s: int
    lam: float

    def __post_init__(self):
        for name in ("w_s", "w_v", "p_v", "p_s"):
            object.__setattr__(self, name, check_matrix(getattr(self, name), name))
        if self.w_s.shape != (self.k, self.d_s) or self.w_v.shape != (self.k, self.d_v):
            raise DimensionMismatch("intermediate map shapes inconsistent with k/d_v/d_s")
        if self.p_v.shape != (self.k, self.d_v) or self.p_s.shape != (self.k, self.d_s):
            raise DimensionMismatch("autoencoder shapes inconsistent with k/d_v/d_s")


def train_intermediate(train, k):
    """Top-k orthonormal semantic map w_s from the spectrum of S H S^T,
    its induced visual map w_v, and the intermediate features f = w_s S."""
    k = int(k)
    if not 1 <= k <= min(train.d_v, train.d_s):
        raise DimensionMismatch(f"k={k} outside [1, min(d_v, d_s)]")
    if train.n < k:
        raise DimensionMismatch(f"need at least k={k} samples, got {train.n}")
    h = row_space_projection(train.visual)
    m = train.semantic @ h @ train.semantic.T
    eig = eigh_sym(0.5 * (m + m.T))
    w_s = eig.vectors[:, :k].T.copy()
    w_v = w_s @ train.semantic @ pinv(train.visual)
    f = w_s @ train.semantic
    return w_s, w_v, f


def train_visual_ae(v, f, lam):
    """Visual encoder p_v solving F F^T P + lam P V V^T = (1 + lam) F V^T."""
    v = check_matrix(v, "v")
    f = check_matrix(f, "f")
    lam = float(lam)
    if lam <= 0:
        raise ValueError("lam must be > 0")
    if v.shape[1] != f.shape[1]:
        raise DimensionMismatch("v and f must share a sample count")
    return sylvester_spd(f @ f.T, lam * (v @ v.T), (1.0 + lam) * (f @ v.T))


def train_semantic_ae(s, f, lam):
    """Semantic encoder p_s solving F F^T P + lam P S S^T = (1 + lam) F S^T."""
    return train_visual_ae(s, f, lam)


def train_extractor(train, k, lam=1.0):
    """Train the full extractor: intermediate map plus both autoencoders."""
    w_s, w_v, f = train_intermediate(train, k)
    p_v = train_visual_ae(train.visual, f, lam)
    p_s = train_semantic_ae(train.semantic, f, lam)
    return ExtractorModel(
        w_s=w_s, w_v=w_v, p_v=p_v, p_s=p_s,
        k=int(k), d_v=train.d_v, d_s=train.d_s, lam=float(lam),
    )


def extract(model, v, level):
    """Level-wise features: 1 = raw visual, 2 = p_v v, 3 = p_s^T p_v v."""
    v = check_vector(v, "v")
    if v.size != model.d_v:
        raise DimensionMismatch(f"visual vector length {v.size} != d_v={model.d_v}")
    if level == 1:
        return v.copy()
    if level == 2:
        return model.p_v @ v
    if level == 3:
        return model.p_s.T @ (model.p_v @ v)
    raise ValueError(f"level must be 1, 2 or 3, got {level}")


def classify(s, prototypes, allowed):
    """Nearest prototype among ``allowed`` by squared Euclidean distance.

    Returns (class_id, min squared distance); ties go to the lowest id.
    """
    s = check_vector(s, "s")
    if s.size != prototypes.dim:
        raise DimensionMismatch(f"semantic vector length {s.size} != prototype dim {prototypes.dim}")
    allowed = sorted(int(c) for c in allowed)
    if not allowed:
        raise EmptyAllowedSet("classification over an empty class set")
    best_id, best_d = None, np.inf
    for c in allowed:
        diff = prototypes.vector_for(c) - s
        d = float(diff @ diff)
        if d < best_d:
            best_id, best_d = c, d
    return best_id, best_d
