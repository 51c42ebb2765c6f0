"""Noisy observation synthesis and the gridded joint posterior density
of (delay, Doppler).

The phase is marginalized analytically, so the log posterior over the
prior rectangle is log I0((2 alpha0/N0) |z^H U(x, f_d)|) up to the
normalizer; everything stays in the log domain.  Randomness comes from
a counter-based generator keyed by (master_seed, trial) so Monte Carlo
trials are bit-reproducible regardless of execution order.
"""

from dataclasses import dataclass, field

import numpy as np

from . import specfun
from .errors import ConfigurationError, NumericalError
from .sigmodel import PulseTrainConfig, steering_vector

LN2 = np.log(2.0)

# Noise variances at or below this are treated as "no noise".
NO_NOISE = 1e-300


@dataclass(frozen=True)
class PriorRect:
    """Uniform prior rectangle in (delay, Doppler), normalized units."""

    x_center: float
    x_width: float            # D, samples
    fd_center: float
    fd_width: float           # Lambda, cycles/sample

    def __post_init__(self):
        if self.x_width <= 0 or self.fd_width <= 0:
            raise ConfigurationError("prior widths must be positive")

    def log2_area(self) -> float:
        return float(np.log2(self.x_width) + np.log2(self.fd_width))


@dataclass(frozen=True)
class NoiseSpec:
    """Complex noise variance per sample plus the reproducibility seed."""

    n0: float
    master_seed: int = 0

    def __post_init__(self):
        if self.n0 <= 0:
            raise ConfigurationError("n0 must be positive")


def trial_rng(master_seed: int, trial: int) -> np.random.Generator:
    """Counter-based (Philox) stream keyed by (master_seed, trial)."""
    return np.random.Generator(np.random.Philox(key=np.array(
        [master_seed & 0xFFFFFFFFFFFFFFFF, trial & 0xFFFFFFFFFFFFFFFF],
        dtype=np.uint64)))


def synth_received(cfg: PulseTrainConfig, x0: float, fd0: float, phi0: float,
                   alpha0: float, noise: NoiseSpec, trial: int) -> np.ndarray:
    """Observation vector alpha0 e^{j phi0} U(x0, fd0) + W.

    W entries are i.i.d. complex Gaussian with total variance n0 each
    (n0/2 per quadrature); identical (master_seed, trial) reproduce the
    vector bit for bit.
    """
    if alpha0 < 0:
        raise ConfigurationError("alpha0 must be nonnegative")
    signal = alpha0 * np.exp(1j * phi0) * steering_vector(cfg, x0, fd0)
    if noise.n0 <= NO_NOISE:
        return signal
    g = trial_rng(noise.master_seed, trial)
    raw = g.standard_normal(2 * cfg.n_samples)
    w = (raw[0::2] + 1j * raw[1::2]) * np.sqrt(noise.n0 / 2.0)
    return signal + w


def _cell_centered(lo: float, hi: float, n: int) -> np.ndarray:
    h = (hi - lo) / n
    return lo + h * (np.arange(n) + 0.5)


class GridEvaluator:
    """Precomputed machinery for evaluating the posterior on a fixed grid.

    The steering inner products factor as
    z^H U(x_i, fd_j) = env[i, :] @ (conj(z) * phase[:, j]),
    one complex GEMM per observation instead of nx*nfd steering vectors.
    """

    def __init__(self, cfg: PulseTrainConfig, prior: PriorRect,
                 nx: int = 256, nfd: int = 256):
        if nx < 2 or nfd < 2:
            raise ConfigurationError("grid must have at least 2 points per axis")
        self.cfg = cfg
        self.prior = prior
        self.x_axis = _cell_centered(prior.x_center - prior.x_width / 2,
                                     prior.x_center + prior.x_width / 2, nx)
        self.fd_axis = _cell_centered(prior.fd_center - prior.fd_width / 2,
                                      prior.fd_center + prior.fd_width / 2, nfd)
        self.cell_area = (prior.x_width / nx) * (prior.fd_width / nfd)
        n = cfg.sample_indices()
        centers = cfg.pulse_centers()
        diffs = n[None, :, None] - centers[None, None, :] - self.x_axis[:, None, None]
        self.env = specfun.sinc(diffs).sum(axis=2)          # (nx, N)
        self.phase = np.exp(2j * np.pi * np.outer(n, self.fd_axis))  # (N, nfd)

    def correlation_magnitude(self, z: np.ndarray) -> np.ndarray:
        # all-real arithmetic from here on: env is real anyway, and keeping
        # the real and imaginary channels separate through the product, the
        # two matrix multiplies, and sqrt(re^2 + im^2) makes the magnitude
        # bit-invariant under a global phase rotation of z by i (complex
        # ufuncs and zgemm may fuse multiply-adds, which breaks that)
        zr, zi = z.real[:, None], z.imag[:, None]
        pr, pi = self.phase.real, self.phase.imag
        tr = zr * pr + zi * pi
        ti = zr * pi - zi * pr
        wr = self.env @ tr
        wi = self.env @ ti
        return np.sqrt(wr ** 2 + wi ** 2)

    def log_posterior(self, z: np.ndarray, alpha0: float, n0: float) -> np.ndarray:
        """Normalized natural-log posterior density over the grid."""
        if alpha0 == 0.0:
            logd = np.zeros((len(self.x_axis), len(self.fd_axis)))
        else:
            logd = specfun.log_bessel_i0(2.0 * alpha0 / n0 *
                                         self.correlation_magnitude(z))
        peak = logd.max()
        log_norm = peak + np.log(np.sum(np.exp(logd - peak))) + np.log(self.cell_area)
        return logd - log_norm

    def entropy_bits(self, log_density: np.ndarray) -> float:
        p = np.exp(log_density)
        return float(-np.sum(p * log_density) * self.cell_area / LN2)


@dataclass(frozen=True)
class PosteriorGrid:
    """Gridded joint posterior with log-domain storage."""

    log_density: np.ndarray = field(repr=False)   # natural log
    x_axis: np.ndarray = field(repr=False)
    fd_axis: np.ndarray = field(repr=False)
    cell_area: float

    def check_normalized(self, tol: float = 1e-9):
        total = float(np.sum(np.exp(self.log_density)) * self.cell_area)
        if abs(total - 1.0) > tol:
            raise NumericalError(f"posterior grid not normalized: integral {total}")

    def argmax_location(self):
        i, j = np.unravel_index(np.argmax(self.log_density), self.log_density.shape)
        return self.x_axis[i], self.fd_axis[j]

    def write_csv(self, path):
        """Dump in the documented `x,fd,log2_density` schema."""
        with open(path, "w") as fh:
            fh.write("x,fd,log2_density\n")
            for i, x in enumerate(self.x_axis):
                for j, fd in enumerate(self.fd_axis):
                    fh.write(f"{x:.12g},{fd:.12g},{self.log_density[i, j] / LN2:.12g}\n")


def posterior_grid(z: np.ndarray, cfg: PulseTrainConfig, prior: PriorRect,
                   alpha0: float, n0: float, nx: int = 256, nfd: int = 256) -> PosteriorGrid:
    """Joint posterior density of (delay, Doppler) on an nx-by-nfd grid."""
    ev = GridEvaluator(cfg, prior, nx, nfd)
    logd = ev.log_posterior(z, alpha0, n0)
    return PosteriorGrid(log_density=logd, x_axis=ev.x_axis,
                         fd_axis=ev.fd_axis, cell_area=ev.cell_area)


def posterior_entropy(grid: PosteriorGrid) -> float:
    """Differential entropy of the gridded posterior in bits (Riemann sum)."""
    grid.check_normalized()
    p = np.exp(grid.log_density)
    return float(-np.sum(p * grid.log_density) * grid.cell_area / LN2)
