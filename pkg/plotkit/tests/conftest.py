"""Shared fixtures: one tiny experiment run feeding every figure test."""

import subprocess
import sys

import pytest

CONFIG = """\
[run]
n_samples = 16
m_pulses = 2, 4
x_width = 4
snr_start_db = -10
snr_stop_db = 0
snr_step_db = 5
trials = 2
scatter_m = 8
pri_list = 1e-3, 1e-1, 10
"""


@pytest.fixture(scope="session")
def artifact_dir(tmp_path_factory):
    """Run the experiment CLI once per session to produce the four CSVs."""
    out = tmp_path_factory.mktemp("artifacts")
    cfg = out / "run.ini"
    cfg.write_text(CONFIG)
    for kind in ("fig1", "fig2", "fig3", "fig4"):
        subprocess.run(
            [sys.executable, "-m", "radinfo.cli", kind,
             "--config", str(cfg), "--out", str(out)],
            check=True, capture_output=True)
    return out
