"""Command-line front end: states, sweeps, thresholds, and figure presets.

Subcommands
    state          five density-matrix elements, Z, and both measures at one T
    sweep          CSV of (T, concurrence, l1_norm, g1, g2, branch) on a grid
    threshold      entanglement sudden-death temperature
    coherence-max  location and value of the l1 coherence maximum
    figure         preset sweeps reproducing the published curves, one CSV each
    params         derived (w, Delta)/k_B from masses and geometry

Options may come from a flat `key = value` config file (`--config`, `#`
comments); command-line flags override file values.  Floats are serialized
with repr, which round-trips doubles, and CSVs are written atomically
(temp file + rename) so identical runs are byte-identical.

Exit codes: 0 success, 1 usage/config error, 2 oracle cross-check failure.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
import tempfile

from . import analysis, correlations, oracle
from .model import (
    DeltaConvention,
    ModelParams,
    PhysicalSetup,
    UnitMode,
    params_from_physical,
)
from .thermal import T_FLOOR, thermal_state

ORACLE_TOL = 1e-10

CSV_HEADER = ("T", "concurrence", "l1_norm", "g1", "g2", "branch")

# Per-curve presets behind `figure N`.  Natural-unit figures share a
# 400-point log grid over [1e-2, 1e2]; the Kelvin figures use [1e-5, 1e2] K.
# Figure 3 fixes only the w list - the published curves never state their
# delta values - so an explicit --delta-list (one value per w, each > w) is
# required.  Figure 9 is one data set shown twice, so ids 9a and 9b emit the
# same sweep.
_GRID_NATURAL = (1e-2, 1e2, 400)
_GRID_KELVIN = (1e-5, 1e2, 400)
_MARLETTO = (0.015, 0.5101e-6)
_KRISNANDA = (0.015, 17.0072)

FIGURE_PRESETS: dict[str, dict] = {
    "2": {"curves": [(0.1, 0.01), (1.0, 0.3), (2.0, 1.2), (3.0, 3.0)]},
    "3": {"w_list": [0.01, 0.1, 1.0], "needs_delta_list": True},
    "4": {"curves": [(1.0, 0.01), (1.0, 0.1), (1.0, 0.2)]},
    "5": {"curves": [(1.0, 0.2)], "print_threshold": True},
    "6": {"curves": [(0.05, 0.05), (0.1, 0.1), (0.5, 0.5)]},
    "7": {"curves": [(3.0, 100.0), (3.0, 300.0), (3.0, 600.0)]},
    "8": {"curves": [_MARLETTO], "kelvin": True},
    "9a": {"curves": [_KRISNANDA], "kelvin": True},
    "9b": {"curves": [_KRISNANDA], "kelvin": True},
}


class UsageError(Exception):
    """Invalid flags or config; maps to exit code 1."""


class OracleMismatch(Exception):
    """Closed form disagreed with the brute-force path; maps to exit code 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fmt(x: float) -> str:
    return repr(float(x))


# ---------------------------------------------------------------- config ----

def _parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("true", "1", "yes", "on"):
        return True
    if lowered in ("false", "0", "no", "off"):
        return False
    raise ValueError(f"expected a boolean, got {text!r}")


_KEY_TYPES = {
    "w": float,
    "delta": float,
    "mass": float,
    "d": float,
    "L": float,
    "G": float,
    "kB": float,
    "w_over_kb": float,
    "delta_convention": str,
    "t": float,
    "t_min": float,
    "t_max": float,
    "n_points": int,
    "spacing": str,
    "rel_tol": float,
    "out": str,
    "out_dir": str,
    "delta_list": str,
    "oracle_check": _parse_bool,
}


def _load_config(path: str) -> dict:
    values: dict = {}
    try:
        with open(path, encoding="utf-8") as handle:
            for lineno, raw in enumerate(handle, start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise UsageError(f"{path}:{lineno}: expected 'key = value'")
                key, _, value = line.partition("=")
                key = key.strip().replace("-", "_")
                if key not in _KEY_TYPES:
                    raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
                try:
                    values[key] = _KEY_TYPES[key](value.strip())
                except ValueError as exc:
                    raise UsageError(f"{path}:{lineno}: bad value for {key}: {exc}")
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}")
    return values


def _merge_options(args: argparse.Namespace) -> dict:
    """Config-file values overridden by explicitly given flags."""
    options = _load_config(args.config) if getattr(args, "config", None) else {}
    for key in _KEY_TYPES:
        flag_value = getattr(args, key, None)
        if flag_value is not None:
            options[key] = flag_value
    return options


# ------------------------------------------------------------ resolution ----

def _resolve_convention(options: dict) -> DeltaConvention:
    text = str(options.get("delta_convention", "paper-numbers")).replace("_", "-")
    for convention in DeltaConvention:
        if convention.value == text:
            return convention
    raise UsageError(f"unknown delta convention {text!r}")


def _resolve_setup(options: dict) -> PhysicalSetup:
    missing = [k for k in ("mass", "d", "L", "w_over_kb") if k not in options]
    if missing:
        raise UsageError(f"physical block incomplete, missing: {', '.join(missing)}")
    kwargs = {
        "mass": options["mass"],
        "d": options["d"],
        "L": options["L"],
        "w_over_kB": options["w_over_kb"],
        "delta_convention": _resolve_convention(options),
    }
    if "G" in options:
        kwargs["G"] = options["G"]
    if "kB" in options:
        kwargs["k_B"] = options["kB"]
    try:
        return PhysicalSetup(**kwargs)
    except ValueError as exc:
        raise UsageError(str(exc))


def _resolve_model(options: dict) -> ModelParams:
    """(w, delta) given directly, or derived from the physical block."""
    has_natural = "w" in options or "delta" in options
    has_physical = any(k in options for k in ("mass", "d", "L", "w_over_kb"))
    if has_natural and has_physical:
        raise UsageError("give either (w, delta) or the physical block, not both")
    if has_physical:
        return params_from_physical(_resolve_setup(options))
    if "w" not in options or "delta" not in options:
        raise UsageError("model incomplete: need both w and delta (or a physical block)")
    try:
        return ModelParams(w=options["w"], delta=options["delta"])
    except ValueError as exc:
        raise UsageError(str(exc))


def _resolve_spacing(options: dict) -> analysis.Spacing:
    text = str(options.get("spacing", "log")).lower()
    for spacing in analysis.Spacing:
        if spacing.value == text:
            return spacing
    raise UsageError(f"unknown spacing {text!r} (expected log or linear)")


# ----------------------------------------------------------------- output ----

def _write_csv_atomic(path: str, rows) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp_path = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(CSV_HEADER)
            for row in rows:
                writer.writerow(
                    (
                        _fmt(row.temperature),
                        _fmt(row.concurrence),
                        _fmt(row.l1_norm),
                        _fmt(row.g1),
                        _fmt(row.g2),
                        row.branch.value,
                    )
                )
        os.replace(tmp_path, path)
    except OSError:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise


# ----------------------------------------------------------- oracle check ----

def _oracle_reference(params: ModelParams, temperature: float):
    """(concurrence, l1, g1, g2) recomputed through the brute-force path."""
    rho = oracle.gibbs_state(oracle.build_hamiltonian(params), temperature)
    g1 = 2.0 * abs(float(rho[0, 3]))
    g2 = 2.0 * abs(float(rho[1, 2]))
    return oracle.wootters_concurrence(rho), g1 + g2, g1, g2


def _check_rows_against_oracle(params: ModelParams, rows, tol: float = ORACLE_TOL):
    """Raise OracleMismatch on the first row the brute-force path disputes."""
    for row in rows:
        if row.temperature < T_FLOOR:
            continue  # the brute-force Gibbs path needs T > 0
        conc, l1, g1, g2 = _oracle_reference(params, row.temperature)
        for name, got, want in (
            ("concurrence", row.concurrence, conc),
            ("l1_norm", row.l1_norm, l1),
            ("g1", row.g1, g1),
            ("g2", row.g2, g2),
        ):
            if abs(got - want) > tol:
                raise OracleMismatch(
                    f"T={row.temperature!r}: {name} closed-form {got!r} "
                    f"vs oracle {want!r} (|diff| > {tol})"
                )


# ------------------------------------------------------------- subcommands ----

def _cmd_state(options: dict) -> int:
    if "t" not in options:
        raise UsageError("state requires a temperature (--t)")
    params = _resolve_model(options)
    temperature = options["t"]
    state = thermal_state(params, temperature)
    rep = correlations.report(params, temperature)
    if options.get("oracle_check") and temperature >= T_FLOOR:
        rows = [
            analysis.SweepRow(
                temperature=temperature,
                concurrence=rep.concurrence,
                l1_norm=rep.l1_norm,
                g1=rep.g1,
                g2=rep.g2,
                branch=rep.branch,
            )
        ]
        _check_rows_against_oracle(params, rows)
    print(f"w = {_fmt(params.w)}")
    print(f"delta = {_fmt(params.delta)}")
    print(f"unit_mode = {params.unit_mode.value}")
    print(f"T = {_fmt(temperature)}")
    for name in ("rho11", "rho14", "rho22", "rho23", "rho44"):
        print(f"{name} = {_fmt(getattr(state, name))}")
    print(f"Z = {_fmt(state.z)}")
    if state.ground_degenerate:
        print("ground_degenerate = true")
    print(f"concurrence = {_fmt(rep.concurrence)}")
    print(f"l1_norm = {_fmt(rep.l1_norm)}")
    print(f"g1 = {_fmt(rep.g1)}")
    print(f"g2 = {_fmt(rep.g2)}")
    print(f"branch = {rep.branch.value}")
    return 0


def _sweep_spec_from(options: dict, params: ModelParams) -> analysis.SweepSpec:
    missing = [k for k in ("t_min", "t_max", "n_points") if k not in options]
    if missing:
        raise UsageError(f"sweep block incomplete, missing: {', '.join(missing)}")
    try:
        return analysis.SweepSpec(
            params=params,
            t_min=options["t_min"],
            t_max=options["t_max"],
            n_points=options["n_points"],
            spacing=_resolve_spacing(options),
        )
    except ValueError as exc:
        raise UsageError(str(exc))


def _cmd_sweep(options: dict) -> int:
    if "out" not in options:
        raise UsageError("sweep requires an output path (--out)")
    params = _resolve_model(options)
    spec = _sweep_spec_from(options, params)
    rows = analysis.sweep(spec)
    if options.get("oracle_check"):
        _check_rows_against_oracle(params, rows)
    _write_csv_atomic(options["out"], rows)
    print(f"wrote {options['out']} ({len(rows)} rows)")
    return 0


def _cmd_threshold(options: dict) -> int:
    params = _resolve_model(options)
    rel_tol = options.get("rel_tol", 1e-6)
    try:
        result = analysis.threshold_temperature(params, rel_tol=rel_tol)
    except ValueError as exc:
        raise UsageError(str(exc))
    print(f"t_th = {_fmt(result.t_th)}")
    print(f"status = {result.status.value}")
    print(f"bracket_lo = {_fmt(result.bracket[0])}")
    print(f"bracket_hi = {_fmt(result.bracket[1])}")
    print(f"iterations = {result.iterations}")
    return 0


def _cmd_coherence_max(options: dict) -> int:
    params = _resolve_model(options)
    result = analysis.coherence_maximum(params)
    print(f"t_star = {_fmt(result.t_star)}")
    print(f"l1_max = {_fmt(result.l1_max)}")
    print(f"status = {result.status.value}")
    return 0


def _cmd_params(options: dict) -> int:
    setup = _resolve_setup(options)
    derived = params_from_physical(setup)
    # both conventions differ by exactly a factor two; print both so the
    # ambiguity in the source is visible, not hidden
    numbers = setup.alpha * (1.0 / setup.d - 1.0 / setup.d_prime) / setup.k_B
    print(f"d_prime = {_fmt(setup.d_prime)}")
    print(f"alpha = {_fmt(setup.alpha)}")
    print(f"w_over_kB = {_fmt(derived.w)}")
    print(f"delta_over_kB = {_fmt(derived.delta)}")
    print(f"convention = {setup.delta_convention.value}")
    print(f"delta_over_kB_paper_numbers = {_fmt(numbers)}")
    print(f"delta_over_kB_paper_text = {_fmt(0.5 * numbers)}")
    return 0


def _figure_curves(figure_id: str, options: dict) -> list[ModelParams]:
    preset = FIGURE_PRESETS[figure_id]
    unit_mode = UnitMode.PHYSICAL if preset.get("kelvin") else UnitMode.NATURAL
    if preset.get("needs_delta_list"):
        if "delta_list" not in options:
            raise UsageError(
                f"figure {figure_id} does not fix its delta values; "
                "pass --delta-list d1,d2,d3 (one per w, each > w)"
            )
        try:
            deltas = [float(x) for x in str(options["delta_list"]).split(",")]
        except ValueError as exc:
            raise UsageError(f"bad --delta-list: {exc}")
        w_list = preset["w_list"]
        if len(deltas) != len(w_list):
            raise UsageError(
                f"figure {figure_id} needs {len(w_list)} delta values "
                f"(for w = {w_list}), got {len(deltas)}"
            )
        for w, delta in zip(w_list, deltas):
            if delta <= w:
                raise UsageError(
                    f"figure {figure_id} assumes delta > w; got delta={delta} for w={w}"
                )
        curves = list(zip(w_list, deltas))
    else:
        if "delta_list" in options:
            raise UsageError("--delta-list is only meaningful for figure 3")
        curves = preset["curves"]
    return [ModelParams(w=w, delta=delta, unit_mode=unit_mode) for w, delta in curves]


def _cmd_figure(options: dict, figure_id: str) -> int:
    if figure_id not in FIGURE_PRESETS:
        raise UsageError(
            f"unknown figure {figure_id!r} (expected one of {sorted(FIGURE_PRESETS)})"
        )
    preset = FIGURE_PRESETS[figure_id]
    t_min, t_max, n_points = _GRID_KELVIN if preset.get("kelvin") else _GRID_NATURAL
    out_dir = options.get("out_dir", ".")
    for params in _figure_curves(figure_id, options):
        spec = analysis.SweepSpec(
            params=params, t_min=t_min, t_max=t_max, n_points=n_points
        )
        rows = analysis.sweep(spec)
        if options.get("oracle_check"):
            _check_rows_against_oracle(params, rows)
        path = os.path.join(
            out_dir, f"fig{figure_id}_w{_fmt(params.w)}_delta{_fmt(params.delta)}.csv"
        )
        _write_csv_atomic(path, rows)
        print(f"wrote {path} ({len(rows)} rows)")
        if preset.get("print_threshold"):
            result = analysis.threshold_temperature(params)
            print(f"threshold_t = {_fmt(result.t_th)}")
    return 0


# -------------------------------------------------------------- arg parsing ----

def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="flat key = value config file")
    parser.add_argument("--w", type=float, help="level splitting (natural units)")
    parser.add_argument("--delta", type=float, help="coupling (natural units)")
    parser.add_argument("--mass", type=float, help="particle mass [kg]")
    parser.add_argument("--d", type=float, help="like-minima separation [m]")
    parser.add_argument("--L", type=float, help="well minima distance [m]")
    parser.add_argument("--G", type=float, help="gravitational constant override")
    parser.add_argument("--kB", type=float, help="Boltzmann constant override")
    parser.add_argument("--w-over-kb", dest="w_over_kb", type=float, help="w/k_B [K]")
    parser.add_argument(
        "--delta-convention",
        dest="delta_convention",
        choices=["paper-numbers", "paper-text"],
        help="coupling formula convention (default paper-numbers)",
    )


def _build_parser() -> _Parser:
    parser = _Parser(prog="gravcats", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_state = sub.add_parser("state", help="thermal state at one temperature")
    _add_common_flags(p_state)
    p_state.add_argument("--t", type=float, help="temperature")
    p_state.add_argument(
        "--oracle-check", dest="oracle_check", action="store_true", default=None
    )

    p_sweep = sub.add_parser("sweep", help="CSV sweep over a temperature grid")
    _add_common_flags(p_sweep)
    p_sweep.add_argument("--t-min", dest="t_min", type=float)
    p_sweep.add_argument("--t-max", dest="t_max", type=float)
    p_sweep.add_argument("--n-points", dest="n_points", type=int)
    p_sweep.add_argument("--spacing", choices=["log", "linear"])
    p_sweep.add_argument("--out", help="output CSV path")
    p_sweep.add_argument(
        "--oracle-check", dest="oracle_check", action="store_true", default=None
    )

    p_threshold = sub.add_parser("threshold", help="sudden-death temperature")
    _add_common_flags(p_threshold)
    p_threshold.add_argument("--rel-tol", dest="rel_tol", type=float)

    p_cmax = sub.add_parser("coherence-max", help="maximum of the l1 coherence")
    _add_common_flags(p_cmax)

    p_figure = sub.add_parser("figure", help="preset sweeps for published figures")
    p_figure.add_argument("figure_id", metavar="N", help="2..7, 8, 9a or 9b")
    _add_common_flags(p_figure)
    p_figure.add_argument("--out-dir", dest="out_dir", help="output directory")
    p_figure.add_argument("--delta-list", dest="delta_list", help="figure 3 deltas")
    p_figure.add_argument(
        "--oracle-check", dest="oracle_check", action="store_true", default=None
    )

    p_params = sub.add_parser("params", help="derived (w, Delta)/k_B from geometry")
    _add_common_flags(p_params)

    return parser


_COMMANDS = {
    "state": _cmd_state,
    "sweep": _cmd_sweep,
    "threshold": _cmd_threshold,
    "coherence-max": _cmd_coherence_max,
    "params": _cmd_params,
}


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        options = _merge_options(args)
        if args.command == "figure":
            return _cmd_figure(options, args.figure_id)
        return _COMMANDS[args.command](options)
    except UsageError as exc:
        print(f"gravcats: error: {exc}", file=sys.stderr)
        return 1
    except OracleMismatch as exc:
        print(f"gravcats: oracle mismatch: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"gravcats: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"gravcats: error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())
