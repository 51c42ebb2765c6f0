"""CSV schemas shared with the experiment CLI, and a strict loader.

The four figure kinds consume three stable schemas:

- posterior grid (fig1):  x,fd,log2_density
- MI / EE sweep (fig2, fig3): snr_db,m_pulses,mi_bits,mi_stderr,bound_bits,ee,ee_lower_bound
- scattering sweep (fig4): snr_db,pri_s,m_pulses,model,info_bits
"""

import csv
import os

import numpy as np

from .errors import SchemaError

GRID_COLUMNS = ("x", "fd", "log2_density")
MI_COLUMNS = ("snr_db", "m_pulses", "mi_bits", "mi_stderr",
              "bound_bits", "ee", "ee_lower_bound")
SCATTER_COLUMNS = ("snr_db", "pri_s", "m_pulses", "model", "info_bits")

# which columns hold text rather than numbers, per schema
_TEXT_COLUMNS = {SCATTER_COLUMNS: ("model",)}


def load_table(path: str, columns: tuple) -> dict:
    """Read a CSV into a dict of column name -> numpy array (or list for
    text columns), validating the header and rejecting empty files."""
    if not os.path.exists(path):
        raise SchemaError(f"input CSV not found: {path}")
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path} is empty") from None
        if tuple(header) != columns:
            raise SchemaError(
                f"{path}: expected columns {','.join(columns)}, "
                f"found {','.join(header)}")
        rows = list(reader)
    if not rows:
        raise SchemaError(f"{path} has a header but no data rows")
    text = _TEXT_COLUMNS.get(columns, ())
    table = {}
    for i, name in enumerate(columns):
        cells = [r[i] for r in rows]
        if name in text:
            table[name] = cells
        else:
            try:
                table[name] = np.array([float(c) for c in cells])
            except ValueError as exc:
                raise SchemaError(f"{path}: non-numeric value in "
                                  f"column {name!r}: {exc}") from None
    return table
