"""Shared fixtures: seeded generators, CLI runner, state files."""

import json
import subprocess
import sys

import numpy as np
import pytest

from eurkit import FiniteState, normalize

_acceptance_lines = []


def record_acceptance(line: str) -> None:
    """Collect per-criterion verdict lines; they are replayed in the
    terminal summary so a plain pytest run shows one line per criterion."""
    _acceptance_lines.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


def run_cli(*args, env_extra=None, cwd=None):
    """Run the CLI in a subprocess; the exit-code contract is part of the
    interface, so tests never call main() in-process."""
    import os
    env = os.environ.copy()
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "eurkit.cli", *map(str, args)],
        capture_output=True, text=True, env=env, cwd=cwd)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


@pytest.fixture
def uniform4_file(tmp_path):
    path = tmp_path / "u4.json"
    json.dump({"type": "finite", "re": [0.5] * 4, "im": [0.0] * 4},
              open(path, "w"))
    return str(path)


@pytest.fixture
def corrupt_file(tmp_path):
    # norm-squared 0.5: loader must refuse it by name, not renormalize
    path = tmp_path / "bad.json"
    json.dump({"type": "finite", "re": [np.sqrt(0.5), 0.0, 0.0, 0.0],
               "im": [0.0] * 4}, open(path, "w"))
    return str(path)


def random_finite(rng, dim):
    amp = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return normalize(FiniteState(amp))
