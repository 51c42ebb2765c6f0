"""Pulse-train geometry: steering vectors, the delay-Doppler ambiguity
kernel, and the RMS spread constants every other module consumes.

All quantities are normalized: delays in samples (x = tau * B) and
Doppler in cycles per sample (f_d = F_D / B).  Physical-unit conversion
is a CLI concern.  The pulse train is centered in the fast-time window
so that every pulse stays well inside it; only phases (never magnitudes
or information quantities) differ from an uncentered train.
"""

from dataclasses import dataclass

import numpy as np

from . import specfun
from .errors import ConfigurationError


@dataclass(frozen=True)
class PulseTrainConfig:
    """Geometry of an M-pulse coherent train sampled over N fast-time samples."""

    m_pulses: int
    pri_seconds: float
    bandwidth_hz: float
    n_samples: int
    normalized: bool = True  # delays in samples, Doppler in cycles/sample

    def __post_init__(self):
        if self.m_pulses < 1:
            raise ConfigurationError("m_pulses must be >= 1")
        if self.n_samples < 2 or self.n_samples % 2 != 0:
            raise ConfigurationError("n_samples must be even and >= 2")
        if self.bandwidth_hz <= 0 or self.pri_seconds <= 0:
            raise ConfigurationError("bandwidth_hz and pri_seconds must be positive")
        if self.m_pulses > 1:
            trb = self.pri_seconds * self.bandwidth_hz
            if trb < 1.0:
                raise ConfigurationError("pulses overlap: T_R * B must be >= 1")
            if self.m_pulses * trb > self.n_samples:
                raise ConfigurationError(
                    "pulse train does not fit the fast-time window: "
                    "m_pulses * T_R * B must be <= n_samples"
                )

    @property
    def trb(self) -> float:
        """Pulse spacing in samples (T_R * B)."""
        return self.pri_seconds * self.bandwidth_hz

    def sample_indices(self) -> np.ndarray:
        """Fast-time sample grid n = -N/2 .. N/2-1."""
        half = self.n_samples // 2
        return np.arange(-half, half, dtype=float)

    def pulse_centers(self) -> np.ndarray:
        """Pulse center positions (samples) at zero delay, centered in the window."""
        m = np.arange(self.m_pulses, dtype=float)
        return (m - (self.m_pulses - 1) / 2.0) * self.trb


@dataclass(frozen=True)
class SpreadConstants:
    """RMS spreads governing delay and Doppler estimation precision."""

    beta_x: float  # rad per sample
    beta_d: float  # rad per cycle/sample


def steering_vector(cfg: PulseTrainConfig, x: float, f_d: float) -> np.ndarray:
    """Sampled delayed-and-Doppler-shifted pulse train template.

    Entry at fast-time index n is
    sum_m sinc(n - c_m - x) * exp(j 2 pi f_d n)
    with c_m the pulse centers; length is cfg.n_samples.
    """
    n = cfg.sample_indices()
    centers = cfg.pulse_centers()
    env = specfun.sinc(n[:, None] - centers[None, :] - x).sum(axis=1)
    return env * np.exp(2j * np.pi * f_d * n)


def dirichlet(m_pulses: int, u: float):
    """sin(pi*M*u)/sin(pi*u) evaluated stably for all u.

    Uses the identity D(u) = (-1)^(k(M-1)) * M * sinc(M*eps)/sinc(eps)
    with u = k + eps, |eps| <= 1/2, which is exact at the peaks instead
    of merely close: the curvature tests depend on that.
    """
    u = np.asarray(u, dtype=float)
    k = np.round(u)
    eps = u - k
    parity = np.where((k.astype(np.int64) * (m_pulses - 1)) % 2 == 0, 1.0, -1.0)
    return parity * m_pulses * specfun.sinc(m_pulses * eps) / specfun.sinc(eps)


def ambiguity(cfg: PulseTrainConfig, dx: float, df: float):
    """Delay-Doppler ambiguity kernel sinc(dx) * sin(pi M T_R B df)/sin(pi T_R B df).

    Equals M at (0, 0); the Dirichlet singularities are removable and
    handled exactly.
    """
    return specfun.sinc(dx) * dirichlet(cfg.m_pulses, cfg.trb * np.asarray(df, float))


def spread_constants(cfg: PulseTrainConfig) -> SpreadConstants:
    """RMS bandwidth/duration constants of the train in normalized units.

    beta_x = pi/sqrt(3) (unit normalized bandwidth); beta_d matches the
    second-order Taylor expansion of the Dirichlet kernel,
    beta_d^2 = pi^2 (T_R B)^2 (M^2 - 1) / 3, so a single pulse carries
    no Doppler resolution.
    """
    beta_x = np.pi / np.sqrt(3.0)
    m = cfg.m_pulses
    beta_d = np.pi * cfg.trb * np.sqrt((m * m - 1) / 3.0)
    return SpreadConstants(beta_x=beta_x, beta_d=beta_d)
