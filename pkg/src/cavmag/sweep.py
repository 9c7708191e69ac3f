"""Grid sweeps: stability, occupations and entanglement over parameter axes.

Axes are specified by parameter path (e.g. ``delta_a1``, ``kappa1``, ``G1``,
``T``) with bounds in the human units of the CLI (MHz for every rate and
detuning, i.e. the value divided by 2*pi; mK for temperature). Conversion to
internal rad/us happens once per grid point, immediately before the model is
built. Every grid point is an independent pure evaluation, so results do not
depend on evaluation order or the number of worker processes.
"""

from __future__ import annotations

import dataclasses
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .entanglement import (log_negativity_pair, magnon_triple_contangle,
                           steady_covariance)
from .linalg import UnstableSystemError
from .model import (MAGNON_TRIPLE, TWO_PI, ModeIndex, SystemParams,
                    apply_detuning_constraints, build_linear_model, magnon)
from .steady import DEFAULT_STABILITY_MARGIN, spectral_abscissa, steady_means

# ---------------------------------------------------------------------------
# Parameter paths

_TRIPLE_FIELDS = ("omega_a", "omega_m", "delta_a", "delta_m",
                  "g", "kappa", "gamma", "G", "Omega")
_SCALAR_FIELDS = ("J12", "J23", "T")

# human-unit factor: internal = human * factor
_FREQ_FACTOR = TWO_PI      # MHz -> rad/us
_TEMP_FACTOR = 1e-3        # mK -> K


def parameter_paths() -> tuple[str, ...]:
    """All sweepable parameter paths."""
    paths = [f"{f}{j}" for f in _TRIPLE_FIELDS for j in (1, 2, 3)]
    paths += list(_SCALAR_FIELDS)
    return tuple(paths)


def _split_path(path: str) -> tuple[str, Optional[int]]:
    if path in _SCALAR_FIELDS:
        return path, None
    for f in _TRIPLE_FIELDS:
        if path.startswith(f) and path[len(f):] in ("1", "2", "3"):
            return f, int(path[len(f):]) - 1
    raise ValueError(f"unknown parameter path {path!r}; "
                     f"valid paths: {', '.join(parameter_paths())}")


def path_to_internal(path: str, human_value: float) -> float:
    field, _ = _split_path(path)
    return human_value * (_TEMP_FACTOR if field == "T" else _FREQ_FACTOR)


def path_column_name(path: str) -> str:
    field, _ = _split_path(path)
    return f"{path}_mK" if field == "T" else f"{path}_MHz"


def set_param(p: SystemParams, path: str, internal_value: float) -> SystemParams:
    """Return a copy of p with one field (internal units) replaced."""
    field, idx = _split_path(path)
    if idx is None:
        return dataclasses.replace(p, **{field: internal_value})
    triple = list(getattr(p, field))
    triple[idx] = internal_value
    return dataclasses.replace(p, **{field: tuple(triple)})


# ---------------------------------------------------------------------------
# Quantities

QUANTITY_GROUPS = ("N_a", "N_m", "E_pairs", "R_min", "abscissa")

_GROUP_COLUMNS = {
    "N_a": ("N_a1", "N_a2", "N_a3"),
    "N_m": ("N_m1", "N_m2", "N_m3"),
    "E_pairs": ("E_m1m2", "E_m1m3", "E_m2m3"),
    "R_min": ("R_min",),
    "abscissa": ("abscissa",),
}

_PAIR_MODES = {
    "E_m1m2": (magnon(1), magnon(2)),
    "E_m1m3": (magnon(1), magnon(3)),
    "E_m2m3": (magnon(2), magnon(3)),
}


def quantity_columns(quantities) -> tuple[str, ...]:
    """Expand quantity groups into CSV columns, in canonical order."""
    unknown = set(quantities) - set(QUANTITY_GROUPS)
    if unknown:
        raise ValueError(f"unknown quantities {sorted(unknown)}; "
                         f"valid: {QUANTITY_GROUPS}")
    cols: list[str] = []
    for group in QUANTITY_GROUPS:
        if group in quantities:
            cols.extend(_GROUP_COLUMNS[group])
    return tuple(cols)


@dataclass(frozen=True)
class EntanglementReport:
    """Everything evaluated at one parameter point.

    Quantities that were not requested, or that are undefined because the
    point is unstable, are None.
    """

    stable: bool
    abscissa: float
    n_a: Optional[tuple[float, float, float]] = None
    n_m: Optional[tuple[float, float, float]] = None
    e_pairs: Optional[dict[str, float]] = None
    r_min: Optional[float] = None
    contangle_residuals: Optional[dict[str, float]] = None


def evaluate_point(p: SystemParams, quantities,
                   margin: float = DEFAULT_STABILITY_MARGIN,
                   triple: tuple[ModeIndex, ...] = MAGNON_TRIPLE,
                   ) -> EntanglementReport:
    """Build the model at p and compute the requested quantity groups.

    Instability is a report state, not an error: unstable points carry
    only the stability flag and the spectral abscissa.
    """
    quantities = set(quantities)
    quantity_columns(quantities)  # validate
    model = build_linear_model(p)
    sa = spectral_abscissa(model.A)
    stable = sa < -margin
    if not stable:
        return EntanglementReport(stable=False, abscissa=sa)

    n_a = n_m = None
    if "N_a" in quantities or "N_m" in quantities:
        mf = steady_means(model, margin)
        n_a, n_m = mf.n_a, mf.n_m

    e_pairs = r_min = residuals = None
    if "E_pairs" in quantities or "R_min" in quantities:
        cm = steady_covariance(model, margin)
        e_pairs = {name: log_negativity_pair(cm, a, b)
                   for name, (a, b) in _PAIR_MODES.items()}
        if "R_min" in quantities:
            r_min, per_pivot = magnon_triple_contangle(cm, triple)
            residuals = {pivot.label: float(r) for pivot, r in per_pivot.items()}

    return EntanglementReport(stable=True, abscissa=sa, n_a=n_a, n_m=n_m,
                              e_pairs=e_pairs, r_min=r_min,
                              contangle_residuals=residuals)


# ---------------------------------------------------------------------------
# Sweep specification and table

@dataclass(frozen=True)
class SweepAxis:
    path: str
    lower: float   # human units (MHz or mK)
    upper: float
    points: int

    def __post_init__(self):
        _split_path(self.path)
        if self.points < 2:
            raise ValueError(f"axis {self.path}: points must be >= 2")
        if not self.lower < self.upper:
            raise ValueError(f"axis {self.path}: lower must be < upper")

    def values(self) -> np.ndarray:
        return np.linspace(self.lower, self.upper, self.points)


@dataclass(frozen=True)
class SweepSpec:
    base: SystemParams
    axis1: SweepAxis
    axis2: Optional[SweepAxis] = None
    constraint: str = "none"
    quantities: tuple[str, ...] = ("E_pairs", "R_min")
    margin: float = DEFAULT_STABILITY_MARGIN
    triple: tuple[ModeIndex, ...] = MAGNON_TRIPLE

    def __post_init__(self):
        if self.constraint not in ("none", "linked_detunings"):
            raise ValueError(f"unknown constraint {self.constraint!r}")
        quantity_columns(self.quantities)


@dataclass(frozen=True)
class SweepTable:
    """Rectangular sweep results, one row per grid point in row-major order.

    ``axis_values`` holds the per-row axis coordinates in human units;
    ``data`` is (n_rows, n_columns) with NaN marking masked (unstable)
    cells. The spectral abscissa is reported for unstable rows too; all
    other quantities are masked there.
    """

    axis_names: tuple[str, ...]
    axis_values: np.ndarray          # (n_rows, n_axes)
    stable: np.ndarray               # (n_rows,) bool
    columns: tuple[str, ...]
    data: np.ndarray                 # (n_rows, n_columns)

    @property
    def n_rows(self) -> int:
        return self.axis_values.shape[0]

    def column(self, name: str) -> np.ndarray:
        if name not in self.columns:
            raise ValueError(f"column {name!r} not in table; have {self.columns}")
        return self.data[:, self.columns.index(name)]

    def header(self) -> tuple[str, ...]:
        return self.axis_names + ("stable",) + self.columns

    def to_csv(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(self.render_csv())

    def render_csv(self) -> str:
        lines = [",".join(self.header())]
        for i in range(self.n_rows):
            cells = [_fmt(v) for v in self.axis_values[i]]
            cells.append("1" if self.stable[i] else "0")
            cells += ["" if math.isnan(v) else _fmt(v) for v in self.data[i]]
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"

    def to_json(self, path) -> None:
        rows = []
        for i in range(self.n_rows):
            row: dict[str, object] = {
                name: float(v) for name, v in zip(self.axis_names, self.axis_values[i])}
            row["stable"] = bool(self.stable[i])
            for name, v in zip(self.columns, self.data[i]):
                row[name] = None if math.isnan(v) else float(v)
            rows.append(row)
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, indent=1)
            fh.write("\n")


def _fmt(value: float) -> str:
    return f"{value:.9g}"


def _params_at(spec: SweepSpec, v1: float, v2: Optional[float]) -> SystemParams:
    p = set_param(spec.base, spec.axis1.path, path_to_internal(spec.axis1.path, v1))
    if spec.axis2 is not None:
        p = set_param(p, spec.axis2.path, path_to_internal(spec.axis2.path, v2))
    if spec.constraint == "linked_detunings":
        delta_a, delta_m = apply_detuning_constraints(p.delta_a[0], p.delta_m[0])
        p = dataclasses.replace(p, delta_a=delta_a, delta_m=delta_m)
    return p


def _report_row(report: EntanglementReport, columns) -> list[float]:
    nan = float("nan")
    values = {"abscissa": report.abscissa}
    for j in range(3):
        values[f"N_a{j + 1}"] = report.n_a[j] if report.n_a else nan
        values[f"N_m{j + 1}"] = report.n_m[j] if report.n_m else nan
    for name in _PAIR_MODES:
        values[name] = report.e_pairs[name] if report.e_pairs else nan
    values["R_min"] = report.r_min if report.r_min is not None else nan
    return [float(values[c]) for c in columns]


def _evaluate_grid_point(args) -> EntanglementReport:
    spec, v1, v2 = args
    return evaluate_point(_params_at(spec, v1, v2), spec.quantities,
                          spec.margin, spec.triple)


def run_sweep(spec: SweepSpec, threads: int = 1) -> SweepTable:
    """Evaluate every grid point; rows in row-major (axis1-outer) order.

    ``threads`` > 1 distributes points over worker processes; the output
    is identical to a serial run.
    """
    v1s = spec.axis1.values()
    v2s = spec.axis2.values() if spec.axis2 is not None else None
    if v2s is None:
        grid = [(spec, v1, None) for v1 in v1s]
        axis_vals = np.array([[v1] for v1 in v1s])
        axis_names = (path_column_name(spec.axis1.path),)
    else:
        grid = [(spec, v1, v2) for v1 in v1s for v2 in v2s]
        axis_vals = np.array([[v1, v2] for v1 in v1s for v2 in v2s])
        axis_names = (path_column_name(spec.axis1.path),
                      path_column_name(spec.axis2.path))

    if threads > 1:
        chunk = max(1, len(grid) // (8 * threads))
        with ProcessPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(_evaluate_grid_point, grid, chunksize=chunk))
    else:
        reports = [_evaluate_grid_point(g) for g in grid]

    columns = quantity_columns(spec.quantities)
    stable = np.array([r.stable for r in reports], dtype=bool)
    data = np.array([_report_row(r, columns) for r in reports]) \
        if columns else np.zeros((len(reports), 0))
    return SweepTable(axis_names=axis_names, axis_values=axis_vals,
                      stable=stable, columns=columns, data=data)


def find_max(table: SweepTable, column: str) -> tuple[tuple[float, ...], float]:
    """Location and value of the maximum over stable rows; first row wins ties."""
    values = table.column(column)
    best_i = -1
    best = -math.inf
    for i in range(table.n_rows):
        if not table.stable[i] or math.isnan(values[i]):
            continue
        if values[i] > best:
            best = float(values[i])
            best_i = i
    if best_i < 0:
        raise UnstableSystemError(
            f"no stable rows carry column {column!r}; cannot locate a maximum")
    return tuple(float(v) for v in table.axis_values[best_i]), best


def temperature_sweep(base: SystemParams,
                      operating_points: dict[str, tuple[float, float]],
                      temperatures_mK,
                      margin: float = DEFAULT_STABILITY_MARGIN,
                      triple: tuple[ModeIndex, ...] = MAGNON_TRIPLE) -> SweepTable:
    """Scan bath temperature, each quantity at its own fixed detuning point.

    ``operating_points`` maps a quantity column (E_m1m2, E_m1m3, E_m2m3,
    R_min) to its (delta_a1, delta_m1) pair in MHz; the linked-detuning
    rule is applied at every point. The table has one row per temperature.
    """
    known = set(_PAIR_MODES) | {"R_min"}
    unknown = set(operating_points) - known
    if unknown:
        raise ValueError(f"unknown temperature-sweep quantities {sorted(unknown)}")
    columns = tuple(c for c in (*_PAIR_MODES, "R_min") if c in operating_points)
    temps = np.asarray(list(temperatures_mK), dtype=float)
    if temps.size < 1 or np.any(temps < 0):
        raise ValueError("temperature axis must be nonempty and nonnegative (mK)")

    rows = []
    stable_rows = []
    for t_mk in temps:
        row = []
        all_stable = True
        for col in columns:
            da1, dm1 = operating_points[col]
            delta_a, delta_m = apply_detuning_constraints(
                da1 * _FREQ_FACTOR, dm1 * _FREQ_FACTOR)
            p = dataclasses.replace(base, delta_a=delta_a, delta_m=delta_m,
                                    T=t_mk * _TEMP_FACTOR)
            group = "R_min" if col == "R_min" else "E_pairs"
            report = evaluate_point(p, {group}, margin, triple)
            if not report.stable:
                all_stable = False
                row.append(float("nan"))
            elif col == "R_min":
                row.append(float(report.r_min))
            else:
                row.append(float(report.e_pairs[col]))
        rows.append(row)
        stable_rows.append(all_stable)

    return SweepTable(axis_names=("T_mK",),
                      axis_values=temps.reshape(-1, 1),
                      stable=np.array(stable_rows, dtype=bool),
                      columns=columns,
                      data=np.array(rows))
