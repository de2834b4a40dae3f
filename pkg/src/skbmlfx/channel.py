"""Scalar link budget: reference-distance path loss, Shannon rate, and
per-payload transmission latency."""

import math
from dataclasses import dataclass

from .errors import NonPositiveDistance, ZeroRate


@dataclass(frozen=True)
class ChannelParams:
    beta0_db: float = -30.0
    d0_m: float = 10.0
    d_m: float = 500.0
    zeta: float = 3.0
    bandwidth_hz: float = 1e6
    noise_dbm_per_hz: float = -174.0
    power_dbm: float = 10.0
    q_bits: int = 32

    def __post_init__(self):
        if self.bandwidth_hz <= 0:
            raise ValueError("bandwidth_hz must be > 0")
        if self.q_bits <= 0:
            raise ValueError("q_bits must be > 0")


def path_loss(params):
    """Linear power gain g = 10^(beta0/10) * (d/d0)^(-zeta)."""
    if params.d0_m <= 0 or params.d_m <= 0:
        raise NonPositiveDistance("distances must be > 0")
    return 10.0 ** (params.beta0_db / 10.0) * (params.d_m / params.d0_m) ** (-params.zeta)


def achievable_rate(params):
    """Shannon rate B log2(1 + p g / (B N0)) in bits/s, powers in watts."""
    g = path_loss(params)
    p_w = 10.0 ** (params.power_dbm / 10.0) * 1e-3
    n0_w = 10.0 ** (params.noise_dbm_per_hz / 10.0) * 1e-3
    snr = p_w * g / (params.bandwidth_hz * n0_w)
    return params.bandwidth_hz * math.log2(1.0 + snr)


def latency(elements, params, rate):
    """Seconds to send ``elements`` vector entries at ``rate`` bits/s."""
    if rate <= 0:
        raise ZeroRate("rate must be > 0")
    if elements < 0:
        raise ValueError("elements must be >= 0")
    return elements * params.q_bits / rate
