"""State and report serialization.

States travel as JSON objects: {"type": "grid"|"finite"|"circle"|
"mixture", ...} with amplitude arrays split into "re"/"im" lists, or
{"type": "named", "name": ..., "params": {...}} addressing a registered
constructor. The CLI shorthand "named:box,a=1" resolves through the
same registry. Loading validates normalization; a corrupt file is
rejected with the violated invariant named, never silently fixed.
"""

from __future__ import annotations

import json
import re

import numpy as np

from .entropy import EntropyValue
from .errors import IncompatibleState, InvalidSpec
from .spectral import UnitaryBasisSet
from .states import (
    CircleState,
    DensityGrid,
    FiniteState,
    GridSpec,
    GridWavefunction,
    MixtureState,
    box_state,
    example1_density,
    example2_density,
    gaussian_state,
)

__all__ = [
    "named_state",
    "named_state_names",
    "parse_state_arg",
    "state_to_json",
    "state_from_json",
    "load_state",
    "save_state",
    "bases_to_json",
    "bases_from_json",
    "load_bases",
    "entropy_to_dict",
    "to_json_text",
    "plot_data_csv",
]

NORM_TOL = 1e-8


# ======================================================================
# named constructors
# ======================================================================

def _named_box(a: float = 1.0, n: int = 2 ** 17):
    return box_state(float(a), n=int(n))


def _named_gaussian(sigma: float = 1.0, x0: float = 0.0, k0: float = 0.0,
                    n: int = 4096, extent: float | None = None):
    grid = None if extent is None else GridSpec.centered(float(extent), int(n))
    return gaussian_state(float(sigma), x0=float(x0), k0=float(k0),
                          grid=grid, n=int(n))


def _named_example1(L: float = 1.0, N: int = 2, n: int = 4096):
    return example1_density(float(L), int(N), n=int(n))


def _named_example2a(L: float = 1.0, n: int = 4096):
    return example2_density("a", float(L), n=int(n))


def _named_example2b(L: float = 1.0, n: int = 4096):
    return example2_density("b", float(L), n=int(n))


def _named_eigenstate(m: int = 0):
    return CircleState(int(m), np.ones(1))


def _named_basis(dim: int = 4, index: int = 0):
    dim, index = int(dim), int(index)
    if not 0 <= index < dim:
        raise InvalidSpec(f"basis index {index} outside dim {dim}")
    return FiniteState(np.eye(dim)[:, index])


_REGISTRY = {
    "box": _named_box,
    "gaussian": _named_gaussian,
    "example1": _named_example1,
    "example2a": _named_example2a,
    "example2b": _named_example2b,
    "eigenstate": _named_eigenstate,
    "basis": _named_basis,
}

_UNIFORM = re.compile(r"^uniform(\d+)$")


def named_state_names() -> tuple:
    return tuple(sorted(_REGISTRY)) + ("uniformN",)


def named_state(name: str, params: dict | None = None):
    """Build a registered state; 'uniformN' is the flat D=N vector."""
    params = dict(params or {})
    m = _UNIFORM.match(name)
    if m:
        if params:
            raise InvalidSpec("uniformN takes no parameters")
        d = int(m.group(1))
        if d < 1:
            raise InvalidSpec("uniformN needs N >= 1")
        return FiniteState(np.full(d, 1.0 / np.sqrt(d)))
    builder = _REGISTRY.get(name)
    if builder is None:
        raise InvalidSpec(
            f"unknown named state {name!r}; known: "
            f"{', '.join(named_state_names())}")
    try:
        return builder(**params)
    except TypeError:
        raise InvalidSpec(
            f"bad parameters {sorted(params)} for named state {name!r}")


def _parse_scalar(text: str):
    if re.fullmatch(r"[+-]?\d+", text):
        return int(text)
    try:
        return float(text)
    except ValueError:
        return text


def parse_state_arg(arg: str):
    """Resolve a CLI state argument: 'named:NAME,k=v,...' or a file path."""
    if arg.startswith("named:"):
        body = arg[len("named:"):]
        if not body:
            raise InvalidSpec("named: needs a state name")
        parts = body.split(",")
        params = {}
        for part in parts[1:]:
            if "=" not in part:
                raise InvalidSpec(f"expected key=value, got {part!r}")
            key, _, value = part.partition("=")
            params[key.strip()] = _parse_scalar(value.strip())
        return named_state(parts[0].strip(), params)
    return load_state(arg)


# ======================================================================
# JSON state format
# ======================================================================

def _split_complex(v: np.ndarray) -> dict:
    return {"re": np.real(v).tolist(), "im": np.imag(v).tolist()}


def _join_complex(obj: dict, what: str) -> np.ndarray:
    re_part = obj.get("re")
    if re_part is None:
        raise InvalidSpec(f"{what} needs a 're' array")
    re_arr = np.asarray(re_part, dtype=np.float64)
    im_part = obj.get("im")
    im_arr = (np.zeros_like(re_arr) if im_part is None
              else np.asarray(im_part, dtype=np.float64))
    if im_arr.shape != re_arr.shape:
        raise InvalidSpec(f"{what} re/im length mismatch")
    return re_arr + 1j * im_arr


def _check_norm(n2: float, what: str) -> None:
    if abs(n2 - 1.0) > NORM_TOL:
        raise InvalidSpec(
            f"{what} violates unit norm: norm-squared = {n2:.6g}, expected 1 "
            f"within {NORM_TOL:g}")


def state_to_json(state) -> dict:
    if isinstance(state, GridWavefunction):
        g = state.grid
        out = {"type": "grid", "grid": {"x_min": g.x_min, "dx": g.dx, "n": g.n}}
        out.update(_split_complex(state.values))
        return out
    if isinstance(state, FiniteState):
        return {"type": "finite", **_split_complex(state.amplitudes)}
    if isinstance(state, CircleState):
        return {"type": "circle", "m_min": state.m_min,
                **_split_complex(state.coefficients)}
    if isinstance(state, MixtureState):
        return {"type": "mixture", "weights": state.weights.tolist(),
                "components": [state_to_json(c) for c in state.components]}
    raise IncompatibleState(
        f"no JSON form for {type(state).__name__}")


def _grid_from_json(obj) -> GridSpec:
    if not isinstance(obj, dict):
        raise InvalidSpec("grid state needs a 'grid' object")
    try:
        return GridSpec(float(obj["x_min"]), float(obj["dx"]), int(obj["n"]))
    except KeyError as missing:
        raise InvalidSpec(f"grid object missing {missing}")


def state_from_json(obj: dict):
    if not isinstance(obj, dict) or "type" not in obj:
        raise InvalidSpec("state JSON needs a 'type' field")
    kind = obj["type"]
    if kind == "named":
        name = obj.get("name")
        if not isinstance(name, str):
            raise InvalidSpec("named state needs a 'name' string")
        return named_state(name, obj.get("params") or {})
    if kind == "grid":
        grid = _grid_from_json(obj.get("grid"))
        psi = GridWavefunction(grid, _join_complex(obj, "grid state"))
        _check_norm(psi.norm_squared, "grid state")
        return psi
    if kind == "finite":
        state = FiniteState(_join_complex(obj, "finite state"))
        _check_norm(float(np.sum(np.abs(state.amplitudes) ** 2)),
                    "finite state")
        return state
    if kind == "circle":
        if "m_min" not in obj:
            raise InvalidSpec("circle state needs 'm_min'")
        state = CircleState(int(obj["m_min"]),
                            _join_complex(obj, "circle state"))
        _check_norm(float(np.sum(np.abs(state.coefficients) ** 2)),
                    "circle state")
        return state
    if kind == "mixture":
        comps = obj.get("components")
        if not isinstance(comps, list) or not comps:
            raise InvalidSpec("mixture needs a nonempty 'components' list")
        parts = [state_from_json(c) for c in comps]
        bad = [type(p).__name__ for p in parts
               if not isinstance(p, GridWavefunction)]
        if bad:
            raise InvalidSpec(f"mixture components must be grid states, "
                              f"got {bad[0]}")
        return MixtureState(np.asarray(obj.get("weights"), dtype=np.float64),
                            tuple(parts))
    raise InvalidSpec(f"unknown state type {kind!r}")


def load_state(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as e:
        raise InvalidSpec(f"cannot read state file {path}: {e}")
    except json.JSONDecodeError as e:
        raise InvalidSpec(f"state file {path} is not valid JSON: {e}")
    return state_from_json(obj)


def save_state(state, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(state_to_json(state), fh, indent=1)
        fh.write("\n")


# ======================================================================
# basis sets (matrices as row-major re/im arrays)
# ======================================================================

def bases_to_json(bset: UnitaryBasisSet) -> dict:
    return {
        "type": "bases",
        "dim": bset.dim,
        "mutually_unbiased": bset.mutually_unbiased,
        "matrices": [_split_complex(m.ravel()) for m in bset.matrices],
    }


def bases_from_json(obj: dict) -> UnitaryBasisSet:
    if not isinstance(obj, dict) or obj.get("type") != "bases":
        raise InvalidSpec("basis-set JSON needs type 'bases'")
    dim = int(obj.get("dim", 0))
    if dim < 1:
        raise InvalidSpec("basis set needs dim >= 1")
    mats = []
    for i, m in enumerate(obj.get("matrices") or []):
        flat = _join_complex(m, f"basis matrix {i}")
        if flat.size != dim * dim:
            raise InvalidSpec(
                f"basis matrix {i} has {flat.size} entries, needs {dim * dim}")
        mats.append(flat.reshape(dim, dim))
    if not mats:
        raise InvalidSpec("basis set needs at least one matrix")
    return UnitaryBasisSet(dim, tuple(mats),
                           mutually_unbiased=bool(obj.get("mutually_unbiased",
                                                          False)))


def load_bases(path: str) -> UnitaryBasisSet:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as e:
        raise InvalidSpec(f"cannot read bases file {path}: {e}")
    except json.JSONDecodeError as e:
        raise InvalidSpec(f"bases file {path} is not valid JSON: {e}")
    return bases_from_json(obj)


# ======================================================================
# report emission
# ======================================================================

def entropy_to_dict(value: EntropyValue) -> dict:
    return {"kind": value.kind, "value": value.value,
            "params": dict(value.params)}


def to_json_text(obj) -> str:
    """JSON text for any report-like object (dict or to_dict-bearing)."""
    data = obj.to_dict() if hasattr(obj, "to_dict") else obj
    return json.dumps(data, indent=1, sort_keys=True) + "\n"


def plot_data_csv(pairs) -> str:
    """Two-column CSV (parameter, value) for external plotting."""
    lines = ["parameter,value"]
    lines += [f"{float(a):.12g},{float(b):.12g}" for a, b in pairs]
    return "\n".join(lines) + "\n"
