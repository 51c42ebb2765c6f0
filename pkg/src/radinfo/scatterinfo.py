"""Doppler scattering information.

Slow-time autocorrelation models, the Hermitian Toeplitz correlation
matrix of the scattering sequence, its eigenvalue spectrum, and the
information content per coherent processing interval,
sum_i log2(1 + lambda_i / N0).
"""

from dataclasses import dataclass, field

import numpy as np

from . import specfun, symeig
from .errors import ConfigurationError, ModelError

KINDS = ("jakes", "exponential", "fully_correlated", "uncorrelated")

# Eigenvalues with |lambda| below PSD_TOL * es are treated as exact zeros:
# Jakes matrices at tiny PRI are numerically rank deficient and a stray
# -1e-14 (or +1e-13) eigenvalue must neither NaN nor pollute the sum.
PSD_TOL = 1e-10


@dataclass(frozen=True)
class ScatteringModel:
    """Slow-time autocorrelation family with energy es = R_c(0)."""

    kind: str
    es: float = 1.0
    fm: float = 0.0     # max Doppler in Hz (jakes)
    decay: float = 0.0  # 1/s (exponential)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigurationError(f"unknown scattering kind {self.kind!r}")
        if self.es <= 0:
            raise ConfigurationError("es must be positive")
        if self.kind == "jakes" and self.fm <= 0:
            raise ConfigurationError("jakes model requires fm > 0")
        if self.kind == "exponential" and self.decay <= 0:
            raise ConfigurationError("exponential model requires decay > 0")


@dataclass(frozen=True)
class CorrelationMatrix:
    """Hermitian Toeplitz covariance of the slow-time scattering sequence."""

    order: int
    first_row: np.ndarray = field(repr=False)

    def dense(self) -> np.ndarray:
        idx = np.abs(np.arange(self.order)[:, None] - np.arange(self.order)[None, :])
        mat = np.asarray(self.first_row)[idx]
        if np.iscomplexobj(mat):
            mat = np.where(
                np.arange(self.order)[:, None] > np.arange(self.order)[None, :],
                np.conj(mat), mat,
            )
        return mat

    @property
    def es(self) -> float:
        return float(np.real(self.first_row[0]))


@dataclass(frozen=True)
class EigenSpectrum:
    """Real spectrum of a correlation matrix, sorted descending."""

    eigenvalues: np.ndarray
    residual: float


def autocorr(model: ScatteringModel, tau: float):
    """Slow-time autocorrelation R_c(tau); R_c(0) = es for every kind."""
    tau = np.asarray(tau, dtype=float)
    if model.kind == "jakes":
        return model.es * specfun.bessel_j0(2.0 * np.pi * model.fm * tau)
    if model.kind == "exponential":
        return model.es * np.exp(-model.decay * np.abs(tau))
    if model.kind == "fully_correlated":
        return model.es * np.ones_like(tau)[()]
    # uncorrelated
    return np.where(tau == 0.0, model.es, 0.0)[()]


def build_correlation_matrix(model: ScatteringModel, m: int, pri: float) -> CorrelationMatrix:
    """Toeplitz matrix with first row R_c(0), R_c(T_R), ..., R_c((M-1) T_R)."""
    if m < 1:
        raise ConfigurationError("m must be >= 1")
    if pri <= 0:
        raise ConfigurationError("pri must be positive")
    lags = np.arange(m, dtype=float) * pri
    row = np.atleast_1d(autocorr(model, lags))
    mat = CorrelationMatrix(order=m, first_row=row)
    spec = hermitian_eigenvalues(mat)
    if spec.eigenvalues.min(initial=0.0) < -PSD_TOL * mat.es:
        raise ModelError(
            f"autocorrelation is not positive semidefinite "
            f"(min eigenvalue {spec.eigenvalues.min():.3e})"
        )
    return mat


def hermitian_eigenvalues(matrix: CorrelationMatrix) -> EigenSpectrum:
    """Full real spectrum with a residual certificate max |R v - lambda v|."""
    dense = matrix.dense()
    vals, vecs = symeig.eigh_hermitian(dense)
    resid = float(np.max(np.abs(dense @ vecs - vecs * vals[None, :])))
    return EigenSpectrum(eigenvalues=vals, residual=resid)


def scattering_info(model: ScatteringModel, m: int, pri: float, n0: float,
                    u_norm_sq: float = 1.0) -> float:
    """Doppler scattering information in bits: sum log2(1 + lambda_i/N0).

    u_norm_sq scales each eigenvalue by the fast-time template energy;
    the default 1.0 matches the unit-energy reduction.
    """
    if n0 <= 0:
        raise ConfigurationError("n0 must be positive")
    if m < 1:
        raise ConfigurationError("m must be >= 1")
    # diagonal and rank-one correlation matrices have closed-form spectra;
    # skip the O(m^3) eigendecomposition for them
    if model.kind == "uncorrelated":
        vals = np.full(m, model.es)
    elif model.kind == "fully_correlated":
        vals = np.zeros(m)
        vals[0] = m * model.es
    else:
        spec = hermitian_eigenvalues(build_correlation_matrix(model, m, pri))
        return spectrum_info(spec, model.es, n0, u_norm_sq)
    return spectrum_info(EigenSpectrum(vals, 0.0), model.es, n0, u_norm_sq)


def spectrum_info(spec: EigenSpectrum, es: float, n0: float,
                  u_norm_sq: float = 1.0) -> float:
    """Information from a precomputed spectrum (reused across an SNR sweep)."""
    lam = spec.eigenvalues.copy()
    lam[np.abs(lam) < PSD_TOL * es] = 0.0
    lam = np.clip(lam, 0.0, None)
    return float(np.sum(np.log2(1.0 + lam * u_norm_sq / n0)))


def scattering_info_rate(bd_hz: float, es: float, n0: float) -> float:
    """Information rate B_d log2(1 + E_s/N0) in bits/second."""
    if bd_hz <= 0:
        raise ConfigurationError("bd_hz must be positive")
    return bd_hz * np.log2(1.0 + es / n0)
