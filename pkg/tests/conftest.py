"""Shared fixtures and the acceptance summary report.

The session-scoped fixtures run the reference scenarios once and hand
the same trace to every test that needs it; the terminal-summary hook
prints one PASS/FAIL line per acceptance test at the end of the run.
"""

import pytest
from dataclasses import replace

from exosim import ScenarioConfig, load_defaults, run_scenario

ACCEPTANCE_DETAILS: dict[str, str] = {}
_acceptance_outcomes: dict[str, str] = {}


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    rep = yield
    if rep.when == "call" and "test_acceptance.py" in item.nodeid:
        _acceptance_outcomes[item.name] = "PASS" if rep.passed else "FAIL"
    return rep


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance_outcomes.items():
        detail = ACCEPTANCE_DETAILS.get(name, "")
        suffix = f"  [{detail}]" if detail else ""
        terminalreporter.write_line(f"{outcome}  {name}{suffix}")


@pytest.fixture
def record_detail(request):
    """Setter the acceptance tests use to annotate their summary line."""
    def _set(text: str) -> None:
        ACCEPTANCE_DETAILS[request.node.name] = text
    return _set


@pytest.fixture
def defaults_dict():
    """Fresh default config mapping, safe to mutate."""
    return load_defaults()


@pytest.fixture(scope="session")
def default_config() -> ScenarioConfig:
    return ScenarioConfig.from_dict(load_defaults())


@pytest.fixture(scope="session")
def default_run(default_config):
    """Stock stand-to-walk run: (trace, metrics)."""
    return run_scenario(default_config)


@pytest.fixture(scope="session")
def perturbed_run(default_config):
    """Stand-to-walk run with the first-cycle probe transient enabled."""
    sc = replace(default_config,
                 perturb=replace(default_config.perturb, enabled=True))
    return run_scenario(sc)


@pytest.fixture(scope="session")
def clean_walk_run(default_config):
    """Noiseless stand-to-walk run for smoothness and tracking checks."""
    sc = replace(default_config,
                 pattern=replace(default_config.pattern, noise_std=0.0))
    return run_scenario(sc)
