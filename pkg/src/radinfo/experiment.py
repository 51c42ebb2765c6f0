"""Experiment harness: declarative sweep specs, the four figure
reproductions, CSV emission, and run manifests.

Output schemas (consumed by the plotting package):
  fig1: x,fd,log2_density
  fig2/fig3/sweep(mi): snr_db,m_pulses,mi_bits,mi_stderr,bound_bits,ee,ee_lower_bound
  fig4: snr_db,pri_s,m_pulses,model,info_bits
"""

import configparser
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from . import __version__
from .errors import ConfigurationError
from .infometrics import (ee_lower_bound, entropy_error, mi_monte_carlo,
                          mi_upper_bound, snr_to_n0)
from .posterior import NoiseSpec, PriorRect, posterior_grid, synth_received
from .scatterinfo import (ScatteringModel, build_correlation_matrix,
                          hermitian_eigenvalues, spectrum_info)
from .sigmodel import PulseTrainConfig

MI_HEADER = "snr_db,m_pulses,mi_bits,mi_stderr,bound_bits,ee,ee_lower_bound"
SCATTER_HEADER = "snr_db,pri_s,m_pulses,model,info_bits"

KINDS = ("fig1", "fig2", "fig3", "fig4", "sweep")


def _fmt(v) -> str:
    if isinstance(v, float):
        return format(v, ".12g")
    return str(v)


@dataclass(frozen=True)
class ExperimentSpec:
    """Declarative description of one experiment run."""

    kind: str
    out_dir: str = "."
    n_samples: int = 64
    bandwidth_hz: float = 1.0
    pri_seconds: float = 0.0          # 0 -> auto: N / (2 M) per pulse count
    m_pulses: tuple = (4, 16)
    alpha0: float = 1.0
    x_width: float = 16.0
    fd_width: float = 0.0             # 0 -> full unambiguous interval 1/(T_R B)
    snr_start_db: float = -25.0
    snr_stop_db: float = 20.0
    snr_step_db: float = 5.0
    trials: int = 100
    master_seed: int = 0
    pri_list: tuple = (1e-6, 1e-1, 1e5)
    scatter_fm: float = 1.0
    scatter_es: float = 1.0
    scatter_m: int = 256
    threads: int = 1
    paper_scale: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigurationError(f"unknown experiment kind {self.kind!r}")
        if self.snr_step_db <= 0:
            raise ConfigurationError("snr_step_db must be positive")
        if self.snr_stop_db < self.snr_start_db:
            raise ConfigurationError("snr grid is empty")
        if self.trials < 0:
            raise ConfigurationError("trials must be >= 0")

    def snr_grid(self) -> np.ndarray:
        n = int(np.floor((self.snr_stop_db - self.snr_start_db) / self.snr_step_db + 1e-9)) + 1
        return self.snr_start_db + self.snr_step_db * np.arange(n)

    def pulse_config(self, m: int) -> PulseTrainConfig:
        pri = self.pri_seconds
        if pri <= 0:
            pri = self.n_samples / (2.0 * m * self.bandwidth_hz)
        return PulseTrainConfig(m_pulses=m, pri_seconds=pri,
                                bandwidth_hz=self.bandwidth_hz,
                                n_samples=self.n_samples)

    def prior(self, cfg: PulseTrainConfig) -> PriorRect:
        lam = self.fd_width if self.fd_width > 0 else 1.0 / cfg.trb
        return PriorRect(0.0, self.x_width, 0.0, lam)


_PAPER_OVERRIDES = dict(n_samples=256, m_pulses=(4, 16, 64))


def apply_paper_scale(spec: ExperimentSpec) -> ExperimentSpec:
    if not spec.paper_scale:
        return spec
    return replace(spec, **_PAPER_OVERRIDES)


def default_spec(kind: str) -> ExperimentSpec:
    if kind == "fig1":
        return ExperimentSpec(kind=kind, n_samples=256, m_pulses=(16,),
                              snr_start_db=25.0, snr_stop_db=25.0, trials=1)
    if kind == "fig3":
        return ExperimentSpec(kind=kind, m_pulses=(4,), snr_stop_db=25.0)
    if kind == "fig4":
        return ExperimentSpec(kind=kind, snr_start_db=-10.0, snr_stop_db=20.0,
                              snr_step_db=2.0)
    return ExperimentSpec(kind=kind)


def load_config(path: str) -> dict:
    """Flat key=value config (an [experiment] section, INI syntax)."""
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise ConfigurationError(f"cannot read config file {path}")
    values: dict = {}
    for section in parser.sections():
        values.update(parser[section])
    return values


_LIST_FIELDS = {"m_pulses": int, "pri_list": float}
_SCALARS = {
    "out_dir": str, "n_samples": int, "bandwidth_hz": float,
    "pri_seconds": float, "alpha0": float, "x_width": float,
    "fd_width": float, "snr_start_db": float, "snr_stop_db": float,
    "snr_step_db": float, "trials": int, "master_seed": int,
    "scatter_fm": float, "scatter_es": float, "scatter_m": int,
    "threads": int, "paper_scale": lambda s: str(s).lower() in ("1", "true", "yes"),
}


def spec_from_options(kind: str, options: dict) -> ExperimentSpec:
    spec = default_spec(kind)
    updates = {}
    for key, raw in options.items():
        if raw is None:
            continue
        if key in _LIST_FIELDS:
            conv = _LIST_FIELDS[key]
            if isinstance(raw, str):
                raw = [tok for tok in raw.replace(",", " ").split() if tok]
            updates[key] = tuple(conv(tok) for tok in raw)
        elif key in _SCALARS:
            updates[key] = _SCALARS[key](raw)
        else:
            raise ConfigurationError(f"unknown config key {key!r}")
    return apply_paper_scale(replace(spec, **updates))


def write_manifest(spec: ExperimentSpec, out_dir: str):
    lines = [f"radinfo_version = {__version__}"]
    for key in sorted(spec.__dataclass_fields__):
        lines.append(f"{key} = {_fmt(getattr(spec, key))}")
    with open(os.path.join(out_dir, "manifest.txt"), "w") as fh:
        fh.write("\n".join(lines) + "\n")


def _ensure_out(spec: ExperimentSpec) -> str:
    out = spec.out_dir
    try:
        os.makedirs(out, exist_ok=True)
    except OSError as exc:
        raise ConfigurationError(f"cannot create output directory {out}: {exc}")
    write_manifest(spec, out)
    return out


def _mi_row(spec: ExperimentSpec, snr: float, m: int) -> str:
    cfg = spec.pulse_config(m)
    prior = spec.prior(cfg)
    # a silent transmitter carries no SNR; keep a unit noise floor so the
    # run is still well defined
    n0 = snr_to_n0(snr, spec.alpha0) if spec.alpha0 > 0 else snr_to_n0(snr, 1.0)
    noise = NoiseSpec(n0=n0, master_seed=spec.master_seed)
    est = mi_monte_carlo(cfg, prior, snr, alpha0=spec.alpha0, noise=noise,
                         trials=spec.trials, check_resolution=False)
    bound = mi_upper_bound(cfg, prior, snr) if m >= 2 else float("nan")
    h_cond = prior.log2_area() - est.bits
    ee = entropy_error(h_cond)
    ee_lb = ee_lower_bound(prior, bound) if m >= 2 else float("nan")
    cells = [snr, m, est.bits, est.std_error, bound, ee, ee_lb]
    return ",".join(_fmt(float(c)) if not isinstance(c, int) else str(c)
                    for c in cells)


def _run_mi_sweep(spec: ExperimentSpec, csv_name: str, progress=None) -> str:
    out = _ensure_out(spec)
    points = [(float(snr), int(m)) for m in spec.m_pulses for snr in spec.snr_grid()]
    path = os.path.join(out, csv_name)
    if spec.threads > 1:
        with ProcessPoolExecutor(max_workers=spec.threads) as pool:
            rows = list(pool.map(_mi_row, [spec] * len(points),
                                 [p[0] for p in points], [p[1] for p in points]))
        with open(path, "w") as fh:
            fh.write(MI_HEADER + "\n")
            for row in rows:
                fh.write(row + "\n")
    else:
        with open(path, "w") as fh:
            fh.write(MI_HEADER + "\n")
            for i, (snr, m) in enumerate(points):
                fh.write(_mi_row(spec, snr, m) + "\n")
                fh.flush()
                if progress:
                    progress(i + 1, len(points))
    return path


def run_fig1(spec: ExperimentSpec) -> str:
    """Single high-SNR posterior surface with the truth at (0, 0)."""
    out = _ensure_out(spec)
    m = spec.m_pulses[0]
    cfg = spec.pulse_config(m)
    prior = spec.prior(cfg)
    snr = float(spec.snr_grid()[-1])
    # a silent transmitter carries no SNR; keep a unit noise floor so the
    # run is still well defined
    n0 = snr_to_n0(snr, spec.alpha0) if spec.alpha0 > 0 else snr_to_n0(snr, 1.0)
    noise = NoiseSpec(n0=n0, master_seed=spec.master_seed)
    z = synth_received(cfg, prior.x_center, prior.fd_center, 0.0,
                       spec.alpha0, noise, trial=0)
    grid = posterior_grid(z, cfg, prior, spec.alpha0, noise.n0)
    path = os.path.join(out, "fig1_grid.csv")
    grid.write_csv(path)
    return path


def run_fig2(spec: ExperimentSpec, progress=None) -> str:
    """MI versus SNR for each pulse count, with the closed-form bound."""
    return _run_mi_sweep(spec, "fig2_mi.csv", progress)


def run_fig3(spec: ExperimentSpec, progress=None) -> str:
    """Entropy error versus SNR with its information-implied bound."""
    return _run_mi_sweep(spec, "fig3_ee.csv", progress)


def run_fig4(spec: ExperimentSpec) -> str:
    """Doppler scattering information versus SNR per PRI value."""
    out = _ensure_out(spec)
    model = ScatteringModel("jakes", es=spec.scatter_es, fm=spec.scatter_fm)
    m = spec.scatter_m
    path = os.path.join(out, "fig4_scatter.csv")
    with open(path, "w") as fh:
        fh.write(SCATTER_HEADER + "\n")
        for pri in spec.pri_list:
            spectrum = hermitian_eigenvalues(build_correlation_matrix(model, m, pri))
            for snr in spec.snr_grid():
                n0 = spec.scatter_es / 10.0 ** (snr / 10.0)
                bits = spectrum_info(spectrum, model.es, n0)
                fh.write(f"{_fmt(float(snr))},{_fmt(float(pri))},{m},jakes,{_fmt(bits)}\n")
    return path


def run_sweep(spec: ExperimentSpec, progress=None) -> str:
    """Generic grid over (snr, m_pulses, pri): closed-form MI bound plus
    scattering information per point, flushed row by row with a resume
    marker so an interrupted sweep can be continued."""
    out = _ensure_out(spec)
    model = ScatteringModel("jakes", es=spec.scatter_es, fm=spec.scatter_fm)
    points = [(float(snr), int(m), float(pri))
              for snr in spec.snr_grid()
              for m in spec.m_pulses
              for pri in spec.pri_list]
    path = os.path.join(out, "sweep.csv")
    marker = os.path.join(out, "sweep.resume")
    start = 0
    if os.path.exists(marker) and os.path.exists(path):
        with open(marker) as fh:
            start = int(fh.read().strip() or 0)
    mode = "a" if start > 0 else "w"
    spectra = {}
    try:
        with open(path, mode) as fh:
            if start == 0:
                fh.write("snr_db,m_pulses,pri_s,bound_bits,scatter_bits\n")
            for i in range(start, len(points)):
                snr, m, pri = points[i]
                cfg = spec.pulse_config(m)
                prior = spec.prior(cfg)
                bound = mi_upper_bound(cfg, prior, snr) if m >= 2 else float("nan")
                key = (m, pri)
                if key not in spectra:
                    spectra[key] = hermitian_eigenvalues(
                        build_correlation_matrix(model, m, pri))
                n0 = spec.scatter_es / 10.0 ** (snr / 10.0)
                sbits = spectrum_info(spectra[key], model.es, n0)
                fh.write(f"{_fmt(snr)},{m},{_fmt(pri)},{_fmt(bound)},{_fmt(sbits)}\n")
                fh.flush()
                with open(marker, "w") as mk:
                    mk.write(str(i + 1))
                if progress:
                    progress(i + 1, len(points))
    except Exception:
        raise
    else:
        if os.path.exists(marker):
            os.remove(marker)
    return path


RUNNERS = {
    "fig1": run_fig1,
    "fig2": run_fig2,
    "fig3": run_fig3,
    "fig4": run_fig4,
    "sweep": run_sweep,
}
