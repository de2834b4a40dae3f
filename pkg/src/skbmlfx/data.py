"""Synthetic zero-shot worlds (linear generative model standing in for real
image features) and CSV feature/prototype I/O."""

from dataclasses import dataclass

import numpy as np

from .errors import ConfigInvalid, DimensionMismatch, IoFailure, MalformedHeader, RejectionExhausted
from .extractor import SemanticPrototypes, TrainingSet

MIN_PROTOTYPE_DISTANCE = 0.1
REJECTION_CAP = 10_000


@dataclass(frozen=True)
class SynthConfig:
    c_total: int = 17
    c_seen_tx: int = 7
    c_seen_rx: int = 7
    d_v: int = 64
    d_s: int = 16
    k_hint: int = 6
    n_per_class: int = 40
    noise_sigma: float = 0.05
    seed: int = 0

    def __post_init__(self):
        if min(self.c_total, self.d_v, self.d_s, self.k_hint, self.n_per_class) < 1:
            raise ConfigInvalid("counts must be >= 1")
        if self.c_seen_tx < 1 or self.c_seen_rx < 1:
            raise ConfigInvalid("each party needs at least one seen class")
        if max(self.c_seen_tx, self.c_seen_rx) > self.c_total:
            raise ConfigInvalid("seen class counts cannot exceed c_total")
        if max(self.c_seen_tx, self.c_seen_rx) >= self.c_total:
            raise ConfigInvalid("no unseen classes left: zero-shot split requires c_seen < c_total")
        if self.noise_sigma < 0:
            raise ConfigInvalid("noise_sigma must be >= 0")


@dataclass(frozen=True)
class GeneratedWorld:
    prototypes: SemanticPrototypes
    tx_train: TrainingSet
    rx_train: TrainingSet
    test_visual: np.ndarray
    test_labels: np.ndarray
    tx_classes: tuple
    rx_classes: tuple
    test_classes: tuple


def _sample_prototypes(rng, c_total, d_s):
    vectors = np.empty((d_s, c_total))
    for c in range(c_total):
        for attempt in range(REJECTION_CAP):
            cand = rng.normal(size=d_s)
            cand /= np.linalg.norm(cand)
            if c == 0 or np.min(np.linalg.norm(vectors[:, :c] - cand[:, None], axis=0)) >= MIN_PROTOTYPE_DISTANCE:
                vectors[:, c] = cand
                break
        else:
            raise RejectionExhausted(f"no separated prototype after {REJECTION_CAP} draws")
    return vectors


def generate(cfg):
    """Build a seeded synthetic world: unit-norm separated prototypes, a
    ground-truth linear visual map, per-party seen-class training sets sharing
    a common sample pool, and test samples from unseen classes only."""
    rng = np.random.default_rng(cfg.seed)
    protos = SemanticPrototypes(
        class_ids=tuple(range(cfg.c_total)),
        vectors=_sample_prototypes(rng, cfg.c_total, cfg.d_s),
    )
    gmap = rng.normal(size=(cfg.d_v, cfg.d_s)) / np.sqrt(cfg.d_s)
    perm = rng.permutation(cfg.c_total)
    n_seen = max(cfg.c_seen_tx, cfg.c_seen_rx)
    tx_classes = tuple(int(c) for c in perm[: cfg.c_seen_tx])
    rx_classes = tuple(int(c) for c in perm[: cfg.c_seen_rx])
    test_classes = tuple(int(c) for c in perm[n_seen:])

    def samples_for(c, n):
        s_c = protos.vector_for(c)
        return gmap @ np.tile(s_c[:, None], (1, n)) + cfg.noise_sigma * rng.normal(size=(cfg.d_v, n))

    pool = {int(c): samples_for(int(c), cfg.n_per_class) for c in perm[:n_seen]}

    def training_set(classes):
        visual = np.hstack([pool[c] for c in classes])
        labels = np.repeat(np.array(classes, dtype=np.int64), cfg.n_per_class)
        semantic = np.hstack([np.tile(protos.vector_for(c)[:, None], (1, cfg.n_per_class)) for c in classes])
        return TrainingSet(visual=visual, labels=labels, semantic=semantic)

    tx_train = training_set(tx_classes)
    rx_train = training_set(rx_classes)
    test_visual = np.hstack([samples_for(c, cfg.n_per_class) for c in test_classes])
    test_labels = np.repeat(np.array(test_classes, dtype=np.int64), cfg.n_per_class)
    return GeneratedWorld(
        prototypes=protos,
        tx_train=tx_train,
        rx_train=rx_train,
        test_visual=test_visual,
        test_labels=test_labels,
        tx_classes=tx_classes,
        rx_classes=rx_classes,
        test_classes=test_classes,
    )


def _fmt(v):
    return f"{v:.17g}"


def save_features(path, train):
    """Write 'label,v_1..v_Dv' rows under a '# dv= ds= n=' header."""
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(f"# dv={train.d_v} ds={train.d_s} n={train.n}\n")
            for i in range(train.n):
                fh.write(str(int(train.labels[i])) + ","
                         + ",".join(_fmt(v) for v in train.visual[:, i]) + "\n")
    except OSError as exc:
        raise IoFailure(str(exc)) from exc


def _parse_header(line):
    if not line.startswith("#"):
        raise MalformedHeader("feature file must start with '# dv=<int> ds=<int> n=<int>'")
    fields = {}
    for tok in line[1:].split():
        key, _, val = tok.partition("=")
        fields[key] = val
    try:
        return int(fields["dv"]), int(fields["ds"]), int(fields["n"])
    except (KeyError, ValueError) as exc:
        raise MalformedHeader(f"bad header fields: {line!r}") from exc


def load_features(path, prototypes):
    """Read a feature file back into a TrainingSet; semantic columns are
    reconstructed from the per-label prototypes."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = [ln.rstrip("\n") for ln in fh if ln.strip()]
    except OSError as exc:
        raise IoFailure(str(exc)) from exc
    if not lines:
        raise MalformedHeader("empty feature file")
    d_v, d_s, n = _parse_header(lines[0])
    if d_s != prototypes.dim:
        raise DimensionMismatch(f"header ds={d_s} != prototype dim {prototypes.dim}")
    body = lines[1:]
    if len(body) != n:
        raise MalformedHeader(f"header says n={n} but file has {len(body)} rows")
    labels = np.empty(n, dtype=np.int64)
    visual = np.empty((d_v, n))
    for i, ln in enumerate(body):
        parts = ln.split(",")
        if len(parts) != 1 + d_v:
            raise MalformedHeader(f"row {i}: expected {1 + d_v} fields, got {len(parts)}")
        labels[i] = int(parts[0])
        visual[:, i] = [float(v) for v in parts[1:]]
    semantic = np.stack([prototypes.vector_for(c) for c in labels], axis=1)
    return TrainingSet(visual=visual, labels=labels, semantic=semantic)


def save_prototypes(path, prototypes):
    """Write 'class_id,s_1..s_Ds' rows."""
    try:
        with open(path, "w", encoding="utf-8") as fh:
            for i, c in enumerate(prototypes.class_ids):
                fh.write(str(c) + "," + ",".join(_fmt(v) for v in prototypes.vectors[:, i]) + "\n")
    except OSError as exc:
        raise IoFailure(str(exc)) from exc


def load_prototypes(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = [ln.rstrip("\n") for ln in fh if ln.strip()]
    except OSError as exc:
        raise IoFailure(str(exc)) from exc
    if not lines:
        raise MalformedHeader("empty prototype file")
    ids, cols = [], []
    width = None
    for i, ln in enumerate(lines):
        parts = ln.split(",")
        if width is None:
            width = len(parts)
        elif len(parts) != width:
            raise MalformedHeader(f"row {i}: ragged prototype file")
        ids.append(int(parts[0]))
        cols.append([float(v) for v in parts[1:]])
    return SemanticPrototypes(class_ids=tuple(ids), vectors=np.array(cols).T)
