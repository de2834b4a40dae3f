"""Per-sample menu tests: level losses, latencies, and decisions."""

import numpy as np
import pytest

from skbmlfx.channel import ChannelParams, achievable_rate, latency
from skbmlfx.data import SynthConfig, generate
from skbmlfx.errors import DimensionMismatch
from skbmlfx.extractor import ExtractorModel, SemanticPrototypes, classify, train_extractor
from skbmlfx.lossmodel import PartyContext, SampleMenu, compute_menu, effective_decision
from skbmlfx.skb import build_skb


def identity_model(d=2):
    eye = np.eye(d)
    return ExtractorModel(w_s=eye, w_v=eye, p_v=eye, p_s=eye, k=d, d_v=d, d_s=d, lam=1.0)


def unit_world():
    protos = SemanticPrototypes(class_ids=(1, 2), vectors=np.eye(2))
    model = identity_model()
    ch = ChannelParams()
    rate = achievable_rate(ch)
    return protos, model, ch, rate


def party(model, protos, selection="full"):
    return PartyContext(model=model, skb=build_skb(protos, selection))


def test_symmetric_party_collapse():
    protos, model, ch, rate = unit_world()
    tx = party(model, protos)
    rx = party(model, protos)
    v = np.array([0.8, 0.3])
    menu = compute_menu(v, tx, rx, ch, rate)
    assert abs(menu.losses[0] - menu.losses[1]) <= 1e-12
    assert abs(menu.losses[1] - menu.losses[2]) <= 1e-12
    assert abs(menu.losses[2] - menu.losses[3]) <= 1e-12
    assert len(set(menu.decisions)) == 1


def test_latency_proportions_and_level4_hit():
    protos, model, ch, rate = unit_world()
    tx = party(model, protos)
    rx = party(model, protos)
    menu = compute_menu(np.array([1.0, 0.0]), tx, rx, ch, rate)
    d_v, k, d_s = model.d_v, model.k, model.d_s
    assert menu.latencies[0] / menu.latencies[1] == d_v / k
    assert menu.latencies[2] / menu.latencies[1] == d_s / k
    assert menu.rx_hit == 1
    assert menu.latencies[3] == latency(1, ch, rate)


def test_level4_miss_latency_and_decision():
    protos, model, ch, rate = unit_world()
    tx = party(model, protos)
    rx = party(model, protos, "ids:2")  # receiver cannot know class 1
    menu = compute_menu(np.array([1.0, 0.0]), tx, rx, ch, rate)
    assert menu.tx_estimate == 1
    assert menu.rx_hit == 0
    assert menu.latencies[3] == latency(model.d_s, ch, rate)
    # the conveyed semantic vector still identifies the transmitter's estimate
    assert effective_decision(menu, 4) == 1


def test_restricted_receiver_hand_loss():
    protos, model, ch, rate = unit_world()
    tx = party(model, protos)
    rx = party(model, protos, "ids:2")
    menu = compute_menu(np.array([1.0, 0.0]), tx, rx, ch, rate)
    assert abs(menu.losses[0] - 2.0) <= 1e-12  # ||e2 - e1||^2
    assert effective_decision(menu, 1) == 2


def test_level2_loss_cross_check():
    cfg = SynthConfig(c_total=6, c_seen_tx=4, c_seen_rx=4, d_v=12, d_s=5,
                      k_hint=3, n_per_class=8, seed=3)
    world = generate(cfg)
    m_tx = train_extractor(world.tx_train, 3)
    m_rx = train_extractor(world.rx_train, 3)
    tx = party(m_tx, world.prototypes)
    rx = party(m_rx, world.prototypes, "random:4:1")
    ch = ChannelParams()
    rate = achievable_rate(ch)
    v = world.test_visual[:, 0]
    menu = compute_menu(v, tx, rx, ch, rate)
    _, l2 = classify(m_rx.p_s.T @ (m_tx.p_v @ v), world.prototypes, rx.skb.class_ids)
    assert abs(menu.losses[1] - l2) <= 1e-12


def test_trained_shared_model_collapse():
    cfg = SynthConfig(c_total=6, c_seen_tx=4, c_seen_rx=4, d_v=12, d_s=5,
                      k_hint=3, n_per_class=8, seed=4)
    world = generate(cfg)
    # equal seen-class counts draw the same pooled samples, so both parties
    # train identical models and levels 1-3 coincide
    m_tx = train_extractor(world.tx_train, 3)
    m_rx = train_extractor(world.rx_train, 3)
    tx = party(m_tx, world.prototypes)
    rx = party(m_rx, world.prototypes)
    ch = ChannelParams()
    rate = achievable_rate(ch)
    for i in range(5):
        menu = compute_menu(world.test_visual[:, i], tx, rx, ch, rate)
        assert abs(menu.losses[0] - menu.losses[1]) <= 1e-12
        assert abs(menu.losses[1] - menu.losses[2]) <= 1e-12
        assert menu.decisions[0] == menu.decisions[1] == menu.decisions[2]


def test_menu_validation():
    with pytest.raises(DimensionMismatch):
        SampleMenu(losses=np.zeros(3), latencies=np.ones(4), decisions=(1, 1, 1, 1),
                   tx_estimate=1, rx_hit=1)
    with pytest.raises(ValueError):
        SampleMenu(losses=np.array([-1.0, 0, 0, 0]), latencies=np.ones(4),
                   decisions=(1, 1, 1, 1), tx_estimate=1, rx_hit=1)
    with pytest.raises(ValueError):
        SampleMenu(losses=np.zeros(4), latencies=np.array([1.0, 0.0, 1.0, 1.0]),
                   decisions=(1, 1, 1, 1), tx_estimate=1, rx_hit=1)


def test_party_context_dimension_check():
    protos = SemanticPrototypes(class_ids=(1, 2, 3), vectors=np.eye(3))
    with pytest.raises(DimensionMismatch):
        PartyContext(model=identity_model(2), skb=build_skb(protos, "full"))


def test_compute_menu_rejects_wrong_length():
    protos, model, ch, rate = unit_world()
    tx = party(model, protos)
    rx = party(model, protos)
    with pytest.raises(DimensionMismatch):
        compute_menu(np.ones(3), tx, rx, ch, rate)


def test_effective_decision_level_validation():
    protos, model, ch, rate = unit_world()
    tx = party(model, protos)
    menu = compute_menu(np.array([1.0, 0.0]), tx, tx, ch, rate)
    with pytest.raises(ValueError):
        effective_decision(menu, 5)
