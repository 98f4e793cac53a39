"""Tests for config parsing, the key schema and scenario validation."""

import math

import pytest

from exosim import ConfigError, ScenarioConfig, load_config, load_defaults
from exosim.config import (SCHEMA, parse_grid, parse_harmonics, parse_kv_text,
                           parse_profile)


def test_defaults_cover_schema_exactly():
    cfg = load_defaults()
    assert set(cfg) == set(SCHEMA)


def test_defaults_build_a_scenario():
    sc = ScenarioConfig.from_dict(load_defaults())
    assert sc.kind == "stand_to_walk"
    assert 0.0 < sc.dt <= 0.01
    assert sc.control.tau_limit == 0.275


class TestKvText:
    def test_parses_comments_and_blanks(self):
        text = "# comment\n\nscenario.dt = 0.001\nscenario.seed = 7  \n"
        kv = parse_kv_text(text, "inline")
        assert kv == {"scenario.dt": "0.001", "scenario.seed": "7"}

    def test_rejects_missing_equals(self):
        with pytest.raises(ConfigError, match="inline:1"):
            parse_kv_text("scenario.dt 0.001", "inline")

    def test_rejects_duplicate_keys(self):
        with pytest.raises(ConfigError, match="duplicate"):
            parse_kv_text("a.b = 1\na.b = 2", "inline")

    def test_rejects_empty_key(self):
        with pytest.raises(ConfigError):
            parse_kv_text(" = 3", "inline")


class TestLoadConfig:
    def test_defaults_when_no_path(self):
        assert load_config(None) == load_defaults()

    def test_overlay_overrides_defaults(self, tmp_path):
        path = tmp_path / "exp.cfg"
        path.write_text("scenario.duration = 4.5\nscenario.seed = 9\n")
        cfg = load_config(str(path))
        assert cfg["scenario.duration"] == 4.5
        assert cfg["scenario.seed"] == 9
        assert cfg["control.k_t"] == load_defaults()["control.k_t"]

    def test_unknown_key_is_a_hard_error(self, tmp_path):
        path = tmp_path / "bad.cfg"
        path.write_text("control.k_tt = 31.5\n")
        with pytest.raises(ConfigError, match="unknown keys"):
            load_config(str(path))

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError, match="cannot read"):
            load_config(str(tmp_path / "absent.cfg"))

    def test_type_errors_are_reported(self, tmp_path):
        path = tmp_path / "bad.cfg"
        path.write_text("scenario.dt = fast\n")
        with pytest.raises(ConfigError, match="scenario.dt"):
            load_config(str(path))

    def test_non_finite_floats_rejected(self, tmp_path):
        path = tmp_path / "bad.cfg"
        path.write_text("control.k_t = inf\n")
        with pytest.raises(ConfigError):
            load_config(str(path))

    def test_bool_parsing(self, tmp_path):
        path = tmp_path / "b.cfg"
        path.write_text("perturb.enabled = true\n")
        assert load_config(str(path))["perturb.enabled"] is True
        path.write_text("perturb.enabled = maybe\n")
        with pytest.raises(ConfigError):
            load_config(str(path))


class TestParsers:
    def test_harmonics(self):
        assert parse_harmonics("0.35:0, 0.1:1.5708") == (
            (0.35, 0.0), (0.1, 1.5708))
        with pytest.raises(ConfigError):
            parse_harmonics("0.35")
        with pytest.raises(ConfigError):
            parse_harmonics("a:b")

    def test_profile(self):
        prof = parse_profile("0:0.9, 5:1.2", "gait.cadence_points")
        assert prof.value(0.0) == 0.9
        assert prof.value(5.0) == 1.2
        with pytest.raises(ConfigError):
            parse_profile("", "gait.cadence_points")

    def test_grid(self):
        assert parse_grid("8, 16, 24", "g") == (8.0, 16.0, 24.0)
        with pytest.raises(ConfigError):
            parse_grid("8, x", "g")
        with pytest.raises(ConfigError):
            parse_grid(" ", "g")


class TestScenarioValidation:
    def check(self, message, **overrides):
        cfg = load_defaults()
        cfg.update(overrides)
        with pytest.raises(ConfigError, match=message):
            ScenarioConfig.from_dict(cfg)

    def test_bad_kind(self):
        self.check("scenario.kind", **{"scenario.kind": "sprint"})

    def test_dt_above_stability_cap(self):
        self.check("scenario.dt", **{"scenario.dt": 0.02})

    def test_negative_duration(self):
        self.check("duration", **{"scenario.duration": -1.0})

    def test_stand_plus_ramp_must_fit(self):
        self.check("exceeds", **{"scenario.stand_duration": 8.0,
                                 "scenario.ramp_duration": 5.0})

    def test_smoothing_window_range(self):
        self.check("limb_smoothing_s", **{"scenario.limb_smoothing_s": 2.0})

    def test_omega0_inside_bounds(self):
        self.check("omega0", **{"oscillator.omega0": 100.0})

    def test_transparency_cannot_saturate_alone(self):
        # k_t * backlash half width past the torque limit is a misbuild
        self.check("tau_limit", **{"control.k_t": 60.0})

    def test_perturb_joint_name(self):
        self.check("perturb.joint", **{"perturb.joint": "hip"})

    def test_perturb_requires_stand_to_walk(self):
        self.check("perturb.enabled", **{"perturb.enabled": True,
                                         "scenario.kind": "constant_gait"})

    def test_replay_needs_existing_input(self):
        self.check("input CSV", **{"scenario.kind": "csv_replay",
                                   "scenario.input_path": "/nonexistent.csv"})

    def test_plot_decimation_positive(self):
        self.check("plot_decimation", **{"output.plot_decimation": 0})

    def test_release_offset_must_be_finite(self):
        self.check("release_offset", **{"pendulum.release_offset": math.inf})


def test_schema_descriptions_are_complete():
    for key, (kind, description) in SCHEMA.items():
        assert kind in ("float", "int", "bool", "str"), key
        assert description, f"{key} lacks a description"
