"""Command-line front end.

Subcommands mirror the library surface: ``entropy`` evaluates a single
entropy functional, ``check`` evaluates one uncertainty relation on one
state, ``stress`` sweeps a relation over a random ensemble, ``probe``
minimizes the left side within a parametric family, and ``suite`` runs
the built-in saturation rows.

Exit codes: 0 when the requested quantity was produced and every checked
bound held, 2 when a bound was violated, 1 on any usage or runtime error.
Argparse's own exit-with-2 behavior is overridden so usage errors land
on 1 like every other error.

All numbers print with ``{:.12g}``; output is deterministic for a fixed
seed, byte for byte.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import os
import sys

import numpy as np

from .bounds import RELATIONS, RelationSpec, relation_ids
from .entropy import (
    EntropyValue,
    continuous_renyi,
    continuous_shannon,
    renyi,
    shannon,
    symmetrized,
)
from .errors import EurKitError, IncompatibleState, InvalidSpec
from .measure import (
    BinnedDistribution,
    angular_momentum_probabilities,
    bin_angle,
    bin_momentum,
    bin_position,
    finite_probabilities,
)
from .spectral import dft_matrix, momentum_density
from .states import (
    CircleState,
    DensityGrid,
    FiniteState,
    GridSpec,
    GridWavefunction,
    MixtureState,
    RandomEnsembleSpec,
    mixture_density,
    position_density,
)
from .stateio import (
    load_bases,
    parse_state_arg,
    plot_data_csv,
    to_json_text,
)
from .verify import (
    check,
    describe,
    deutsch_identity_check,
    effective_params,
    kind_of,
    phase_space_check,
    probe_tightness,
    riesz_check,
    saturation_suite,
    stress,
)

__all__ = ["main"]

STRUCTURAL_IDS = ("riesz", "phase-space", "deutsch-identity")

# argparse flag -> RelationSpec parameter name
_PARAM_FLAGS = (
    ("alpha", "alpha"),
    ("beta", "beta"),
    ("s", "s"),
    ("bin_x", "delta_x"),
    ("bin_k", "delta_k"),
    ("origin_x", "origin_x"),
    ("origin_k", "origin_k"),
    ("tail_threshold", "tail_threshold"),
    ("ref_length", "ref_length"),
    ("side", "side"),
    ("bins", "n_bins"),
    ("dim", "dim"),
    ("count", "count"),
)

_ENSEMBLE_FOR_KIND = {
    "grid": "grid-smooth",
    "density": "grid-smooth",
    "mixture": "mixture",
    "finite": "finite-haar",
    "circle": "circle-window",
}


class _Parser(argparse.ArgumentParser):
    """Parser whose usage errors raise instead of exiting with code 2.

    The exit contract reserves 2 for a violated bound; every error,
    including bad flags, must land on 1.
    """

    def error(self, message):
        raise InvalidSpec(message)


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        f = float(v)
        if f == 0.0:
            f = 0.0  # never print -0
        return f"{f:.12g}"
    return str(v)


def _resolve_seed(arg_seed) -> int:
    """--seed wins; EURKIT_SEED is the fallback; then 0."""
    if arg_seed is not None:
        return arg_seed
    env = os.environ.get("EURKIT_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise InvalidSpec(f"EURKIT_SEED must be an integer, got {env!r}")
    return 0


def _relation_params(args) -> dict:
    """Collect only the flags the user actually set; RelationSpec rejects
    any that its relation does not take."""
    out = {}
    for attr, key in _PARAM_FLAGS:
        v = getattr(args, attr, None)
        if v is not None:
            out[key] = v
    path = getattr(args, "bases", None)
    if path is not None:
        out["bases"] = load_bases(path)
    return out


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _emit(args, json_obj, csv_text: str) -> None:
    if getattr(args, "output", None) is None:
        return
    if args.format == "csv":
        _write_text(args.output, csv_text)
    else:
        _write_text(args.output, to_json_text(json_obj))


def _csv_table(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(row)
    return buf.getvalue()


def _dist_pairs(dist) -> list:
    if isinstance(dist, BinnedDistribution):
        if dist.bin_width is None:
            xs = dist.indices.astype(np.float64)
        else:
            xs = dist.positions
        return list(zip(xs, dist.probabilities))
    return list(zip(dist.grid.points, dist.values))


def _side_density(state, side: str) -> DensityGrid:
    if isinstance(state, DensityGrid):
        if side != "position":
            raise IncompatibleState(
                "a bare density carries no phase, so only its position "
                "side exists")
        return state
    if isinstance(state, GridWavefunction):
        return position_density(state) if side == "position" \
            else momentum_density(state)
    if isinstance(state, MixtureState):
        rho_x, rho_k = mixture_density(state)
        return rho_x if side == "position" else rho_k
    raise IncompatibleState(
        f"{describe(state)} has no {side} density")


def _state_pairs(state, params: dict) -> list:
    """Default plot data for a state: the distribution the relation
    actually measures, or the position density when nothing is binned."""
    if isinstance(state, FiniteState):
        p = finite_probabilities(state, np.eye(state.dim))
        return _dist_pairs(p)
    if isinstance(state, CircleState):
        return _dist_pairs(angular_momentum_probabilities(state))
    rho = _side_density(state, "position")
    if params.get("delta_x") is not None:
        dist = bin_position(rho, params["delta_x"],
                            params.get("origin_x", 0.0),
                            tail_threshold=params.get("tail_threshold", 1e-6))
        return _dist_pairs(dist)
    return _dist_pairs(rho)


# ---------------------------------------------------------------- entropy


def _entropy_distribution(args, state):
    """Resolve the distribution or density the requested kind acts on.

    Returns (dist, rho, ref) where exactly one of dist/rho is set.
    """
    kind = kind_of(state)
    continuous = args.kind.startswith("continuous-")
    if kind == "finite":
        if continuous:
            raise IncompatibleState(
                "finite states have exact outcome counts, not densities")
        return finite_probabilities(state, np.eye(state.dim)), None, None
    if kind == "circle":
        if continuous:
            raise IncompatibleState(
                "circle states take binned angle or exact m entropies")
        side = args.side or "m"
        if side == "m":
            return angular_momentum_probabilities(state), None, None
        if side == "angle":
            if args.bins is None:
                raise InvalidSpec("--side angle needs --bins")
            return bin_angle(state, args.bins), None, None
        raise InvalidSpec(
            f"circle states take --side m or angle, not {side}")
    side = args.side or "position"
    if side not in ("position", "momentum"):
        raise InvalidSpec(
            f"grid states take --side position or momentum, not {side}")
    rho = _side_density(state, side)
    if continuous:
        L = args.ref_length
        return None, rho, (L if side == "position" else 1.0 / L)
    if side == "position":
        width, origin, flag = args.bin_x, args.origin_x, "--bin-x"
        binner = bin_position
    else:
        width, origin, flag = args.bin_k, args.origin_k, "--bin-k"
        binner = bin_momentum
    if width is None:
        raise InvalidSpec(f"binned {args.kind} on the {side} side needs {flag}")
    return binner(rho, width, origin,
                  tail_threshold=args.tail_threshold), None, None


def cmd_entropy(args) -> int:
    state = parse_state_arg(args.state)
    dist, rho, ref = _entropy_distribution(args, state)
    target = dist if dist is not None else rho
    if args.kind == "shannon":
        value = shannon(target)
    elif args.kind == "renyi":
        if args.alpha is None:
            raise InvalidSpec("renyi needs --alpha")
        value = renyi(target, args.alpha)
    elif args.kind == "symmetrized":
        if args.s is None:
            raise InvalidSpec("symmetrized needs --s")
        value = symmetrized(target, args.s)
    elif args.kind == "continuous-shannon":
        value = continuous_shannon(rho, ref)
    else:
        if args.alpha is None:
            raise InvalidSpec("continuous-renyi needs --alpha")
        value = continuous_renyi(rho, args.alpha, ref)

    shown = value.value / math.log(2.0) if args.bits else value.value
    print(_fmt(shown))

    obj = {"kind": value.kind, "value": value.value,
           "params": {k: _plain_param(v) for k, v in value.params.items()}}
    if args.bits:
        obj["value_bits"] = value.value / math.log(2.0)
    csv_text = _csv_table(("kind", "value"),
                          [(value.kind, _fmt(value.value))])
    _emit(args, obj, csv_text)

    if args.plot_data or args.figure:
        pairs = _dist_pairs(target)
        if args.plot_data:
            _write_text(args.plot_data, plot_data_csv(pairs))
        if args.figure:
            from .plotting import distribution_figure
            distribution_figure(target, args.figure,
                                title=f"{value.kind} input distribution")
    return 0


def _plain_param(v):
    if isinstance(v, (np.floating, np.integer)):
        return float(v)
    return v


# ------------------------------------------------------------------ check


def _structural_check(args, state):
    rid = args.relation
    tol = args.tol
    if rid == "phase-space":
        return phase_space_check(state)
    if rid == "deutsch-identity":
        bases = load_bases(args.bases) if args.bases else None
        return deutsch_identity_check(state, bases,
                                      tol=1e-7 if tol is None else tol)
    # riesz
    if not isinstance(state, FiniteState):
        raise IncompatibleState(
            f"riesz needs a finite state, got {describe(state)}")
    nu = 1.5 if args.nu is None else args.nu
    if args.bases:
        matrix = load_bases(args.bases).matrices[0]
    else:
        matrix = dft_matrix(state.dim)
    return riesz_check(matrix, state, nu, tol=1e-7 if tol is None else tol)


def _print_report(report) -> None:
    lines = [
        f"relation: {report.relation_id}",
        f"state: {report.state_descriptor}",
        f"lhs: {_fmt(report.lhs)}",
        f"rhs: {_fmt(report.rhs)}",
        f"margin: {_fmt(report.margin)}",
        f"satisfied: {_fmt(report.satisfied)}",
    ]
    for k in sorted(report.diagnostics):
        lines.append(f"diag.{k}: {_fmt(report.diagnostics[k])}")
    print("\n".join(lines))


def cmd_check(args) -> int:
    state = parse_state_arg(args.state)
    if args.relation in STRUCTURAL_IDS:
        report = _structural_check(args, state)
        eff = {}
    else:
        spec = RelationSpec(args.relation, _relation_params(args))
        report = check(state, spec, args.tol)
        eff = effective_params(spec)
    _print_report(report)

    csv_text = report.csv_header() + "\n" + report.csv_row() + "\n"
    _emit(args, report.to_dict(), csv_text)

    if args.plot_data or args.figure:
        pairs = _state_pairs(state, eff)
        if args.plot_data:
            _write_text(args.plot_data, plot_data_csv(pairs))
        if args.figure:
            from .plotting import distribution_figure
            distribution_figure(_pairs_or_state_dist(state, eff), args.figure,
                                title=f"{report.relation_id} input")
    return 0 if report.satisfied else 2


def _pairs_or_state_dist(state, params: dict):
    if isinstance(state, FiniteState):
        return finite_probabilities(state, np.eye(state.dim))
    if isinstance(state, CircleState):
        return angular_momentum_probabilities(state)
    rho = _side_density(state, "position")
    if params.get("delta_x") is not None:
        return bin_position(rho, params["delta_x"],
                            params.get("origin_x", 0.0),
                            tail_threshold=params.get("tail_threshold", 1e-6))
    return rho


# ----------------------------------------------------------------- stress


def _default_ensemble_kind(rid: str) -> str:
    if rid in RELATIONS:
        return _ENSEMBLE_FOR_KIND[RELATIONS[rid].state_kinds[0]]
    if rid == "phase-space":
        return "grid-smooth"
    return "finite-haar"


def cmd_stress(args) -> int:
    rid = args.relation
    seed = _resolve_seed(args.seed)
    kind = args.ensemble or _default_ensemble_kind(rid)

    eparams = {}
    for attr in ("dim", "window", "ncomp", "modes"):
        v = getattr(args, attr, None)
        if v is not None:
            eparams[attr] = v
    if args.grid_n is not None or args.grid_extent is not None:
        n = args.grid_n if args.grid_n is not None else 4096
        extent = args.grid_extent if args.grid_extent is not None else 64.0
        eparams["grid"] = GridSpec.centered(extent, n)
    elif rid == "phase-space":
        # keep the n x n joint table inside the size guard
        eparams["grid"] = GridSpec.centered(64.0, 1024)
    ensemble = RandomEnsembleSpec(kind, seed, eparams)

    if rid in RELATIONS:
        rparams = _relation_params(args)
    else:
        rparams = {}
        if rid == "riesz":
            if args.nu is not None:
                rparams["nu"] = args.nu
            if args.bases:
                rparams["matrix"] = load_bases(args.bases).matrices[0]
        elif rid == "deutsch-identity" and args.bases:
            rparams["bases"] = load_bases(args.bases)

    keep = bool(args.plot_data or args.figure)
    summary = stress(rid, ensemble, args.trials, tol=args.tol,
                     params=rparams, threads=args.threads, keep_margins=keep)

    lines = [
        f"relation: {summary.relation}",
        f"ensemble: {kind}(seed={seed})",
        f"trials: {summary.trials}",
        f"violations: {summary.violations}",
        f"errors: {summary.errors}",
        f"min_margin: {_fmt(summary.min_margin)}",
        f"argmin: {summary.argmin}",
        f"tol: {_fmt(summary.tol)}",
    ]
    print("\n".join(lines))
    for msg in summary.error_descriptors:
        print(f"error-detail: {msg}", file=sys.stderr)

    csv_text = _csv_table(
        ("relation", "trials", "violations", "errors", "min_margin",
         "argmin", "seed", "tol"),
        [(summary.relation, summary.trials, summary.violations,
          summary.errors, _fmt(summary.min_margin), summary.argmin,
          summary.seed, _fmt(summary.tol))])
    _emit(args, summary.to_dict(), csv_text)

    if keep:
        pairs = [(float(i), m) for i, m in summary.margins]
        if args.plot_data:
            _write_text(args.plot_data, plot_data_csv(pairs))
        if args.figure:
            from .plotting import stress_figure
            stress_figure(summary.margins, summary.tol, args.figure,
                          title=f"{summary.relation} margins, "
                                f"{summary.trials} trials")

    if summary.trials > 0 and summary.errors == summary.trials:
        print("error: every trial failed", file=sys.stderr)
        return 1
    return 2 if summary.violations > 0 else 0


# ------------------------------------------------------------------ probe


def cmd_probe(args) -> int:
    seed = _resolve_seed(args.seed)
    if args.relation in STRUCTURAL_IDS:
        raise InvalidSpec(
            f"{args.relation} is an identity check, not a bound to probe")
    spec = RelationSpec(args.relation, _relation_params(args))
    result = probe_tightness(spec, family=args.family, seed=seed,
                             restarts=args.restarts,
                             max_evals=args.max_evals, tol=args.tol)

    params_text = " ".join(_fmt(p) for p in result.best_params)
    lines = [
        f"relation: {result.relation}",
        f"family: {result.family}",
        f"best_lhs: {_fmt(result.best_lhs)}",
        f"rhs: {_fmt(result.rhs)}",
        f"gap: {_fmt(result.gap)}",
        f"best_params: {params_text}",
        f"evaluations: {result.evaluations}",
        f"restarts: {result.restarts}",
        f"seed: {result.seed}",
        f"violation: {_fmt(result.violation)}",
    ]
    print("\n".join(lines))

    csv_text = _csv_table(
        ("relation", "family", "best_lhs", "rhs", "gap", "evaluations",
         "restarts", "seed", "violation"),
        [(result.relation, result.family, _fmt(result.best_lhs),
          _fmt(result.rhs), _fmt(result.gap), result.evaluations,
          result.restarts, result.seed, _fmt(result.violation))])
    _emit(args, result.to_dict(), csv_text)

    if args.plot_data:
        pairs = [(float(i), p) for i, p in enumerate(result.best_params)]
        _write_text(args.plot_data, plot_data_csv(pairs))
    if args.figure:
        from .plotting import probe_figure
        probe_figure(result.best_lhs, result.rhs, args.figure,
                     title=f"{result.relation} over {result.family} family")
    return 2 if result.violation else 0


# ------------------------------------------------------------------ suite


def _suite_label(report) -> str:
    ps = report.parameters
    extra = ",".join(f"{k}={_fmt(v)}" for k, v in sorted(ps.items()))
    return report.relation_id + (f"[{extra}]" if extra else "")


def cmd_suite(args) -> int:
    reports = saturation_suite()
    ok = 0
    labels, margins = [], []
    for rep in reports:
        label = _suite_label(rep)
        labels.append(label)
        margins.append(rep.margin)
        word = "PASS" if rep.satisfied else "FAIL"
        if rep.satisfied:
            ok += 1
        print(f"{word} {label} margin={_fmt(rep.margin)}")
    print(f"suite: {ok}/{len(reports)} rows within tolerance")

    csv_rows = [rep.csv_row().split(",") for rep in reports]
    csv_text = _csv_table(reports[0].csv_header().split(","), csv_rows) \
        if reports else ""
    _emit(args, {"reports": [rep.to_dict() for rep in reports]}, csv_text)

    if args.plot_data:
        pairs = [(float(i), m) for i, m in enumerate(margins)]
        _write_text(args.plot_data, plot_data_csv(pairs))
    if args.figure:
        from .plotting import margins_figure
        margins_figure(labels, margins, args.figure,
                       title="saturation suite margins")
    return 0 if ok == len(reports) else 2


# ------------------------------------------------------------------ parser


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", metavar="PATH",
                   help="write the result to PATH")
    p.add_argument("--format", choices=("json", "csv"), default="json",
                   help="format for --output (default json)")
    p.add_argument("--plot-data", metavar="PATH",
                   help="write two-column parameter,value CSV to PATH")
    p.add_argument("--figure", metavar="PATH",
                   help="render a matplotlib figure to PATH")


def _add_relation_flags(p: argparse.ArgumentParser,
                        with_bases: bool = True) -> None:
    p.add_argument("--alpha", type=float, help="Renyi order")
    p.add_argument("--beta", type=float,
                   help="conjugate order (default alpha/(2 alpha - 1))")
    p.add_argument("--s", type=float, help="symmetrized entropy parameter")
    p.add_argument("--bin-x", type=float, dest="bin_x",
                   help="position cell width")
    p.add_argument("--bin-k", type=float, dest="bin_k",
                   help="momentum cell width")
    p.add_argument("--origin-x", type=float, dest="origin_x",
                   help="position cell origin")
    p.add_argument("--origin-k", type=float, dest="origin_k",
                   help="momentum cell origin")
    p.add_argument("--tail-threshold", type=float, dest="tail_threshold",
                   help="largest admissible unbinned tail mass")
    p.add_argument("--ref-length", type=float, dest="ref_length",
                   help="reference length L for continuous entropies")
    p.add_argument("--side", choices=("position", "momentum"),
                   help="which marginal a one-sided relation reads")
    p.add_argument("--bins", type=int, help="number of angle cells")
    p.add_argument("--dim", type=int, help="finite dimension")
    p.add_argument("--count", type=int, help="number of bases in a MUB set")
    if with_bases:
        p.add_argument("--bases", metavar="PATH",
                       help="JSON file with a unitary basis set")
    p.add_argument("--tol", type=float,
                   help="override the relation's default tolerance")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="eur-kit",
        description="entropic uncertainty measures and bound checks")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    pe = sub.add_parser(
        "entropy", help="evaluate one entropy functional on one state")
    pe.add_argument("--state", required=True,
                    help="state file, or named:NAME[,k=v,...]")
    pe.add_argument("--kind", required=True,
                    choices=("shannon", "renyi", "symmetrized",
                             "continuous-shannon", "continuous-renyi"))
    pe.add_argument("--alpha", type=float, help="Renyi order")
    pe.add_argument("--s", type=float, help="symmetrized entropy parameter")
    pe.add_argument("--side",
                    choices=("position", "momentum", "angle", "m"),
                    help="which marginal to measure "
                         "(default position; m for circle states)")
    pe.add_argument("--bin-x", type=float, dest="bin_x",
                    help="position cell width")
    pe.add_argument("--bin-k", type=float, dest="bin_k",
                    help="momentum cell width")
    pe.add_argument("--origin-x", type=float, dest="origin_x", default=0.0)
    pe.add_argument("--origin-k", type=float, dest="origin_k", default=0.0)
    pe.add_argument("--bins", type=int, help="number of angle cells")
    pe.add_argument("--tail-threshold", type=float, dest="tail_threshold",
                    default=1e-6,
                    help="largest admissible unbinned tail mass")
    pe.add_argument("--ref-length", type=float, dest="ref_length",
                    default=1.0,
                    help="reference length L for continuous entropies")
    pe.add_argument("--bits", action="store_true",
                    help="print the value in bits; files stay in nats")
    _add_output_flags(pe)
    pe.set_defaults(func=cmd_entropy)

    pc = sub.add_parser(
        "check", help="evaluate one uncertainty relation on one state")
    pc.add_argument("--state", required=True,
                    help="state file, or named:NAME[,k=v,...]")
    pc.add_argument("--relation", required=True,
                    choices=relation_ids() + STRUCTURAL_IDS)
    _add_relation_flags(pc)
    pc.add_argument("--nu", type=float,
                    help="norm order for the riesz check (default 1.5)")
    _add_output_flags(pc)
    pc.set_defaults(func=cmd_check)

    ps = sub.add_parser(
        "stress", help="sweep a relation over a random ensemble")
    ps.add_argument("--relation", required=True,
                    choices=relation_ids() + STRUCTURAL_IDS)
    ps.add_argument("--trials", type=int, default=100)
    ps.add_argument("--seed", type=int,
                    help="master seed (falls back to EURKIT_SEED, then 0)")
    ps.add_argument("--ensemble",
                    choices=("finite-haar", "grid-smooth",
                             "circle-window", "mixture"),
                    help="override the relation's natural ensemble")
    ps.add_argument("--threads", type=int, default=1,
                    help="worker threads; results match the serial order")
    ps.add_argument("--dim", type=int, help="finite dimension")
    ps.add_argument("--window", type=int,
                    help="half-width of the circle coefficient window")
    ps.add_argument("--ncomp", type=int, help="mixture component count")
    ps.add_argument("--modes", type=int,
                    help="Fourier modes in smooth grid samples")
    ps.add_argument("--grid-n", type=int, dest="grid_n",
                    help="grid points for grid ensembles")
    ps.add_argument("--grid-extent", type=float, dest="grid_extent",
                    help="grid extent for grid ensembles")
    _add_relation_flags_stress(ps)
    ps.add_argument("--nu", type=float,
                    help="norm order for the riesz check (default 1.5)")
    _add_output_flags(ps)
    ps.set_defaults(func=cmd_stress)

    pp = sub.add_parser(
        "probe", help="minimize a bound's left side within a family")
    pp.add_argument("--relation", required=True, choices=relation_ids())
    pp.add_argument("--family",
                    choices=("gaussian", "finite", "circle"),
                    default="gaussian")
    pp.add_argument("--seed", type=int,
                    help="master seed (falls back to EURKIT_SEED, then 0)")
    pp.add_argument("--restarts", type=int, default=8)
    pp.add_argument("--max-evals", type=int, dest="max_evals", default=20000)
    _add_relation_flags(pp)
    _add_output_flags(pp)
    pp.set_defaults(func=cmd_probe)

    pu = sub.add_parser(
        "suite", help="run the built-in saturation rows")
    _add_output_flags(pu)
    pu.set_defaults(func=cmd_suite)

    return parser


def _add_relation_flags_stress(p: argparse.ArgumentParser) -> None:
    # stress shares the relation flags but not --dim (taken by the
    # ensemble above) and not --count/--bases defaults; keep the set
    # explicit so the two surfaces cannot drift apart silently.
    p.add_argument("--alpha", type=float, help="Renyi order")
    p.add_argument("--beta", type=float,
                   help="conjugate order (default alpha/(2 alpha - 1))")
    p.add_argument("--s", type=float, help="symmetrized entropy parameter")
    p.add_argument("--bin-x", type=float, dest="bin_x",
                   help="position cell width")
    p.add_argument("--bin-k", type=float, dest="bin_k",
                   help="momentum cell width")
    p.add_argument("--origin-x", type=float, dest="origin_x")
    p.add_argument("--origin-k", type=float, dest="origin_k")
    p.add_argument("--tail-threshold", type=float, dest="tail_threshold")
    p.add_argument("--ref-length", type=float, dest="ref_length")
    p.add_argument("--side", choices=("position", "momentum"))
    p.add_argument("--bins", type=int, help="number of angle cells")
    p.add_argument("--count", type=int, help="number of bases in a MUB set")
    p.add_argument("--bases", metavar="PATH",
                   help="JSON file with a unitary basis set")
    p.add_argument("--tol", type=float,
                   help="override the relation's default tolerance")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if not hasattr(args, "func"):
            parser.print_usage(sys.stderr)
            return 1
        return args.func(args)
    except EurKitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
