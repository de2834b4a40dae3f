"""Per-sample menu of the four transmission levels: semantic losses,
latencies, and the class decision effective at the receiver."""

from dataclasses import dataclass

import numpy as np

from .channel import latency
from .errors import DimensionMismatch
from .extractor import ExtractorModel, classify
from .numkernel import check_vector
from .skb import Skb, indicator


@dataclass(frozen=True)
class PartyContext:
    """One party's trained extractor plus its knowledge base."""

    model: ExtractorModel
    skb: Skb

    def __post_init__(self):
        if self.model.d_s != self.skb.prototypes.dim:
            raise DimensionMismatch("model semantic dim != prototype dim")


@dataclass(frozen=True)
class SampleMenu:
    """Losses/latencies of levels 1..4 for one sample, the receiver-effective
    class decision per level, the transmitter's estimate, and whether the
    receiver's SKB holds that estimate."""

    losses: np.ndarray
    latencies: np.ndarray
    decisions: tuple
    tx_estimate: int
    rx_hit: int

    def __post_init__(self):
        losses = np.asarray(self.losses, dtype=np.float64)
        lats = np.asarray(self.latencies, dtype=np.float64)
        if losses.shape != (4,) or lats.shape != (4,):
            raise DimensionMismatch("menu needs exactly 4 losses and 4 latencies")
        if not (np.all(np.isfinite(losses)) and np.all(losses >= 0)):
            raise ValueError("losses must be finite and non-negative")
        if not np.all(lats > 0):
            raise ValueError("latencies must be strictly positive")
        object.__setattr__(self, "losses", losses)
        object.__setattr__(self, "latencies", lats)


def compute_menu(v, tx, rx, ch, rate):
    """Evaluate all four transmission levels for one visual feature vector.

    Levels 1-3 decide at the receiver over its SKB; level 4 decides at the
    transmitter over its SKB and costs one element on an SKB hit, a full
    semantic vector otherwise.
    """
    v = check_vector(v, "v")
    if v.size != tx.model.d_v or v.size != rx.model.d_v:
        raise DimensionMismatch("visual vector length inconsistent with party models")
    protos = rx.skb.prototypes
    rx_allowed = rx.skb.class_ids
    tx_allowed = tx.skb.class_ids

    s_rx = rx.model.p_s.T @ (rx.model.p_v @ v)
    c1, l1 = classify(s_rx, protos, rx_allowed)

    f_tx = tx.model.p_v @ v
    c2, l2 = classify(rx.model.p_s.T @ f_tx, protos, rx_allowed)

    s_tx = tx.model.p_s.T @ f_tx
    c3, l3 = classify(s_tx, protos, rx_allowed)

    c_hat, l4 = classify(s_tx, tx.skb.prototypes, tx_allowed)
    hit = indicator(rx.skb, c_hat)

    d_v, k, d_s = tx.model.d_v, tx.model.k, tx.model.d_s
    lats = np.array([
        latency(d_v, ch, rate),
        latency(k, ch, rate),
        latency(d_s, ch, rate),
        latency(1 if hit else d_s, ch, rate),
    ])
    return SampleMenu(
        losses=np.array([l1, l2, l3, l4]),
        latencies=lats,
        decisions=(c1, c2, c3, c_hat),
        tx_estimate=c_hat,
        rx_hit=hit,
    )


def effective_decision(menu, level):
    """Class the receiver ends up with at the given level (1..4); at level 4
    the conveyed semantic vector identifies the transmitter's estimate whether
    or not the receiver's SKB holds it."""
    if level not in (1, 2, 3, 4):
        raise ValueError(f"level must be in 1..4, got {level}")
    return menu.decisions[level - 1]
