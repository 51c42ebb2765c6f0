"""Figure jobs: map experiment CSVs onto the four standard plots."""

import os
from dataclasses import dataclass, field

import matplotlib.pyplot as plt
import numpy as np

from . import schema, style
from .errors import SchemaError

# default artifact names written by the experiment CLI
INPUT_NAMES = {
    "fig1": "fig1_grid.csv",
    "fig2": "fig2_mi.csv",
    "fig3": "fig3_ee.csv",
    "fig4": "fig4_scatter.csv",
}
KINDS = tuple(INPUT_NAMES)


@dataclass(frozen=True)
class FigureJob:
    """One rendering task: a figure kind, its input directory, an output path."""

    kind: str
    in_dir: str
    out_path: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SchemaError(f"unknown figure kind {self.kind!r}; "
                              f"expected one of {', '.join(KINDS)}")

    @property
    def csv_path(self) -> str:
        return os.path.join(self.in_dir, INPUT_NAMES[self.kind])


def _render_fig1(job: FigureJob):
    table = schema.load_table(job.csv_path, schema.GRID_COLUMNS)
    xs = np.unique(table["x"])
    fds = np.unique(table["fd"])
    if len(xs) * len(fds) != len(table["x"]):
        raise SchemaError(f"{job.csv_path}: rows do not form a full "
                          f"{len(xs)}x{len(fds)} grid")
    dens = np.full((len(xs), len(fds)), np.nan)
    xi = np.searchsorted(xs, table["x"])
    fi = np.searchsorted(fds, table["fd"])
    dens[xi, fi] = table["log2_density"]
    fig, ax = plt.subplots()
    mesh = ax.pcolormesh(xs, fds, dens.T, shading="nearest", cmap="viridis")
    fig.colorbar(mesh, ax=ax, label="log2 posterior density")
    ax.set_xlabel("delay (samples)")
    ax.set_ylabel("Doppler (cycles/sample)")
    ax.set_title("Joint delay-Doppler posterior")
    return fig


def _render_fig2(job: FigureJob):
    table = schema.load_table(job.csv_path, schema.MI_COLUMNS)
    fig, ax = plt.subplots()
    for i, m in enumerate(np.unique(table["m_pulses"])):
        sel = table["m_pulses"] == m
        order = np.argsort(table["snr_db"][sel])
        snr = table["snr_db"][sel][order]
        ax.errorbar(snr, table["mi_bits"][sel][order],
                    yerr=table["mi_stderr"][sel][order],
                    color=style.color(i), marker="o", markersize=3,
                    capsize=2, label=f"M = {int(m)}")
        ax.plot(snr, table["bound_bits"][sel][order],
                color=style.color(i), linestyle="--",
                label=f"M = {int(m)} bound")
    ax.set_xlabel("SNR (dB)")
    ax.set_ylabel("mutual information (bits)")
    ax.set_title("Range-Doppler information vs. SNR")
    ax.legend()
    return fig


def _render_fig3(job: FigureJob):
    table = schema.load_table(job.csv_path, schema.MI_COLUMNS)
    fig, ax = plt.subplots()
    for i, m in enumerate(np.unique(table["m_pulses"])):
        sel = table["m_pulses"] == m
        order = np.argsort(table["snr_db"][sel])
        snr = table["snr_db"][sel][order]
        ax.semilogy(snr, table["ee"][sel][order], color=style.color(i),
                    marker="o", markersize=3, label=f"M = {int(m)}")
        ax.semilogy(snr, table["ee_lower_bound"][sel][order],
                    color=style.color(i), linestyle="--",
                    label=f"M = {int(m)} bound")
    ax.set_xlabel("SNR (dB)")
    ax.set_ylabel("entropy error")
    ax.set_title("Entropy error vs. SNR")
    ax.legend()
    return fig


def _render_fig4(job: FigureJob):
    table = schema.load_table(job.csv_path, schema.SCATTER_COLUMNS)
    fig, ax = plt.subplots()
    for i, pri in enumerate(np.unique(table["pri_s"])):
        sel = table["pri_s"] == pri
        order = np.argsort(table["snr_db"][sel])
        ax.plot(table["snr_db"][sel][order], table["info_bits"][sel][order],
                color=style.color(i), marker="o", markersize=3,
                label=f"PRI = {pri:g} s")
    ax.set_xlabel("SNR (dB)")
    ax.set_ylabel("scattering information (bits)")
    ax.set_title("Doppler scattering information vs. SNR")
    ax.legend()
    return fig


_RENDERERS = {
    "fig1": _render_fig1,
    "fig2": _render_fig2,
    "fig3": _render_fig3,
    "fig4": _render_fig4,
}


def render(job: FigureJob) -> str:
    """Render the job to its output path and return that path.

    Inputs are opened read-only; identical inputs produce identical bytes
    (fixed style, no timestamps in the output metadata).
    """
    with plt.rc_context(style.RC):
        fig = _RENDERERS[job.kind](job)
        style.save(fig, job.out_path)
    return job.out_path
