"""End-to-end tests of the command-line entry point and its exit codes."""

import os

import numpy as np
import pytest

from exosim.cli import TUNING_CSV, main
from exosim.outputs import (GAIT_CSV, METRICS_KV, METRICS_TXT, SIGNALS_SVG,
                            PARAMETERS_SVG, TRACE_CSV, read_metrics_kv)

SHORT_RUN_CFG = """
scenario.kind = constant_gait
scenario.duration = 2.0
"""

TINY_TUNE_CFG = """
tune.kappa_phi_grid = 24.0
tune.kappa_omega_grid = 12.0
tune.kappa_alpha_grid = 3.0
tune.dt = 0.005
tune.duration = 12.0
"""


def write_cfg(tmp_path, text, name="run.cfg"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


class TestRunCommand:
    def test_writes_all_artifacts(self, tmp_path):
        cfg = write_cfg(tmp_path, SHORT_RUN_CFG)
        out = str(tmp_path / "out")
        assert main(["run", "--config", cfg, "--out", out]) == 0
        for name in (TRACE_CSV, METRICS_KV, METRICS_TXT, SIGNALS_SVG,
                     PARAMETERS_SVG):
            assert os.path.getsize(os.path.join(out, name)) > 0

    def test_quiet_suppresses_progress(self, tmp_path, capsys):
        cfg = write_cfg(tmp_path, SHORT_RUN_CFG)
        out = str(tmp_path / "out")
        assert main(["run", "--config", cfg, "--out", out, "--quiet"]) == 0
        assert capsys.readouterr().out == ""

    def test_seed_flag_overrides_config(self, tmp_path):
        cfg = write_cfg(tmp_path, SHORT_RUN_CFG)
        out = str(tmp_path / "out")
        assert main(["run", "--config", cfg, "--out", out, "--quiet",
                     "--seed", "7"]) == 0
        loaded = read_metrics_kv(os.path.join(out, METRICS_KV))
        assert loaded["scenario.seed"] == "7"

    def test_out_colliding_with_a_file_is_an_io_error(self, tmp_path, capsys):
        cfg = write_cfg(tmp_path, SHORT_RUN_CFG)
        blocker = tmp_path / "occupied"
        blocker.write_text("not a directory")
        assert main(["run", "--config", cfg, "--out", str(blocker)]) == 4
        assert "error:" in capsys.readouterr().err


class TestConfigErrors:
    def test_missing_config_file(self, tmp_path, capsys):
        missing = str(tmp_path / "absent.cfg")
        assert main(["run", "--config", missing]) == 2
        assert "cannot read config" in capsys.readouterr().err

    def test_unknown_config_key(self, tmp_path, capsys):
        cfg = write_cfg(tmp_path, "scenario.cadence = 0.9\n")
        assert main(["run", "--config", cfg]) == 2
        assert "unknown" in capsys.readouterr().err

    def test_malformed_value_names_the_location(self, tmp_path, capsys):
        cfg = write_cfg(tmp_path, "scenario.dt = fast\n")
        assert main(["run", "--config", cfg]) == 2
        assert "scenario.dt" in capsys.readouterr().err


class TestReplayCommand:
    def test_missing_input(self, tmp_path, capsys):
        assert main(["replay", str(tmp_path / "absent.csv"), "--quiet"]) == 2
        assert "does not exist" in capsys.readouterr().err

    def test_wrong_time_step(self, tmp_path, capsys):
        path = tmp_path / "bad_dt.csv"
        path.write_text("t,q_right,q_left\n0.0,0.0,0.0\n0.05,0.0,0.0\n")
        assert main(["replay", str(path), "--quiet"]) == 2
        assert "does not match configured dt" in capsys.readouterr().err

    def test_overflowing_magnitudes_are_a_numerical_error(self, tmp_path,
                                                          capsys):
        n = 40
        lines = ["t,q_right,q_left"]
        lines += [f"{i * 0.001:.3f},{(-1e308 if i % 2 else 1e308)!r},0.0"
                  for i in range(n)]
        path = tmp_path / "huge.csv"
        path.write_text("\n".join(lines) + "\n")
        out = str(tmp_path / "out")
        # the alternating huge signal overflows inside the smoothing
        # convolution before any controller maths runs
        with np.errstate(all="ignore"):
            code = main(["replay", str(path), "--quiet", "--out", out])
        assert code == 3
        assert "non-finite" in capsys.readouterr().err

    def test_replays_an_exported_gait(self, tmp_path):
        cfg = write_cfg(tmp_path, SHORT_RUN_CFG)
        out = str(tmp_path / "out")
        assert main(["export-gait", "--config", cfg, "--out", out,
                     "--quiet"]) == 0
        gait = os.path.join(out, GAIT_CSV)
        assert os.path.getsize(gait) > 0
        out2 = str(tmp_path / "replayed")
        assert main(["replay", gait, "--config", cfg, "--out", out2,
                     "--quiet"]) == 0
        loaded = read_metrics_kv(os.path.join(out2, METRICS_KV))
        assert loaded["scenario.kind"] == "csv_replay"


class TestTuneCommand:
    def test_tune_writes_table_and_prints_gains(self, tmp_path, capsys):
        cfg = write_cfg(tmp_path, TINY_TUNE_CFG)
        out = str(tmp_path / "out")
        assert main(["tune", "--config", cfg, "--out", out]) == 0
        assert os.path.getsize(os.path.join(out, TUNING_CSV)) > 0
        stdout = capsys.readouterr().out
        assert "oscillator.kappa_phi = 24.0" in stdout
        assert "oscillator.kappa_omega = 12.0" in stdout
        assert "oscillator.kappa_alpha = 3.0" in stdout

    def test_infeasible_grid_exit_code(self, tmp_path, capsys):
        cfg = write_cfg(tmp_path, TINY_TUNE_CFG.replace(
            "tune.kappa_phi_grid = 24.0", "tune.kappa_phi_grid = 0.05"))
        out = str(tmp_path / "out")
        assert main(["tune", "--config", cfg, "--out", out, "--quiet"]) == 1
        assert "no gain triple" in capsys.readouterr().err
