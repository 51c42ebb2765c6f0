"""Strict CSV loading and its diagnostics."""

import numpy as np
import pytest

from plotkit import SchemaError
from plotkit.schema import GRID_COLUMNS, MI_COLUMNS, SCATTER_COLUMNS, load_table


def test_missing_file(tmp_path):
    with pytest.raises(SchemaError, match="not found"):
        load_table(str(tmp_path / "no.csv"), GRID_COLUMNS)


def test_empty_file(tmp_path):
    p = tmp_path / "empty.csv"
    p.write_text("")
    with pytest.raises(SchemaError, match="empty"):
        load_table(str(p), GRID_COLUMNS)


def test_header_only(tmp_path):
    p = tmp_path / "bare.csv"
    p.write_text("x,fd,log2_density\n")
    with pytest.raises(SchemaError, match="no data rows"):
        load_table(str(p), GRID_COLUMNS)


def test_wrong_columns_named_in_error(tmp_path):
    p = tmp_path / "bad.csv"
    p.write_text("a,b,c\n1,2,3\n")
    with pytest.raises(SchemaError) as exc:
        load_table(str(p), GRID_COLUMNS)
    assert "x,fd,log2_density" in str(exc.value)
    assert "a,b,c" in str(exc.value)


def test_non_numeric_cell(tmp_path):
    p = tmp_path / "text.csv"
    p.write_text("x,fd,log2_density\n0,0,oops\n")
    with pytest.raises(SchemaError, match="log2_density"):
        load_table(str(p), GRID_COLUMNS)


def test_numeric_and_text_columns(tmp_path):
    p = tmp_path / "scatter.csv"
    p.write_text("snr_db,pri_s,m_pulses,model,info_bits\n"
                 "0,0.1,8,jakes,3.5\n5,0.1,8,jakes,4.5\n")
    table = load_table(str(p), SCATTER_COLUMNS)
    assert table["model"] == ["jakes", "jakes"]
    assert np.array_equal(table["snr_db"], [0.0, 5.0])


def test_real_artifacts_load(artifact_dir):
    load_table(str(artifact_dir / "fig1_grid.csv"), GRID_COLUMNS)
    load_table(str(artifact_dir / "fig2_mi.csv"), MI_COLUMNS)
    load_table(str(artifact_dir / "fig3_ee.csv"), MI_COLUMNS)
    load_table(str(artifact_dir / "fig4_scatter.csv"), SCATTER_COLUMNS)
