"""State and basis (de)serialization, named registry, norm policing."""

import json

import numpy as np
import pytest

from eurkit import (
    CircleState,
    FiniteState,
    GridSpec,
    MixtureState,
    UnitaryBasisSet,
    bases_from_json,
    bases_to_json,
    dft_basis,
    gaussian_state,
    load_bases,
    load_state,
    named_state,
    named_state_names,
    parse_state_arg,
    save_state,
    state_from_json,
    state_to_json,
)
from eurkit.errors import InvalidSpec, NotUnitary


def test_round_trip_grid(tmp_path):
    psi = gaussian_state(0.9, x0=0.3, n=512)
    path = tmp_path / "g.json"
    save_state(psi, str(path))
    back = load_state(str(path))
    assert back.grid.n == psi.grid.n
    assert np.max(np.abs(back.values - psi.values)) < 1e-15


def test_round_trip_finite_circle_mixture(tmp_path):
    fin = FiniteState(np.array([0.6, 0.8j, 0.0]))
    circ = CircleState(-1, np.array([0.6, 0.0, 0.8]))
    g = GridSpec.centered(32.0, 256)
    mix = MixtureState((0.3, 0.7), (gaussian_state(1.0, grid=g),
                                    gaussian_state(0.7, grid=g)))
    for state in (fin, circ, mix):
        obj = state_to_json(state)
        back = state_from_json(obj)
        assert type(back) is type(state)
    back_mix = state_from_json(state_to_json(mix))
    assert np.allclose(back_mix.weights, mix.weights)
    assert len(back_mix.components) == 2


def test_norm_enforced_not_repaired(tmp_path):
    path = tmp_path / "bad.json"
    json.dump({"type": "finite", "re": [0.5, 0.5], "im": [0.0, 0.0]},
              open(path, "w"))
    with pytest.raises(InvalidSpec) as info:
        load_state(str(path))
    assert "unit norm" in str(info.value)


def test_missing_file_is_invalid_spec():
    with pytest.raises(InvalidSpec):
        load_state("/nonexistent/state.json")


def test_malformed_json_is_invalid_spec(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(InvalidSpec):
        load_state(str(path))


def test_named_registry():
    names = named_state_names()
    for expected in ("box", "gaussian", "eigenstate", "basis"):
        assert expected in names
    st = named_state("basis", {"dim": 3, "index": 2})
    assert isinstance(st, FiniteState)
    assert abs(st.amplitudes[2]) == pytest.approx(1.0)
    with pytest.raises(InvalidSpec):
        named_state("no-such-state")
    with pytest.raises(InvalidSpec):
        named_state("gaussian", {"bogus_param": 1.0})


def test_uniform_family():
    st = named_state("uniform8")
    assert st.dim == 8
    assert np.max(np.abs(np.abs(st.amplitudes) - 8 ** -0.5)) < 1e-12
    with pytest.raises(InvalidSpec):
        named_state("uniform0")


def test_parse_state_arg_shorthand(tmp_path):
    st = parse_state_arg("named:gaussian,sigma=0.5,n=512")
    assert st.grid.n == 512
    psi = gaussian_state(1.0, n=256)
    path = tmp_path / "s.json"
    save_state(psi, str(path))
    assert parse_state_arg(str(path)).grid.n == 256


def test_bases_round_trip(tmp_path):
    bs = dft_basis(4)
    obj = bases_to_json(bs)
    back = bases_from_json(obj)
    assert isinstance(back, UnitaryBasisSet)
    assert back.mutually_unbiased == bs.mutually_unbiased
    for a, b in zip(back.matrices, bs.matrices):
        assert np.max(np.abs(a - b)) < 1e-15
    path = tmp_path / "b.json"
    json.dump(obj, open(path, "w"))
    assert len(load_bases(str(path)).matrices) == 2


def test_bases_reject_non_unitary(tmp_path):
    obj = bases_to_json(dft_basis(3))
    obj["matrices"][0]["re"] = [2.0] * 9
    obj["matrices"][0]["im"] = [0.0] * 9
    with pytest.raises(NotUnitary):
        bases_from_json(obj)
