"""Config documents: schema validation and conversion to internal units.

Configs are YAML (or JSON) documents validated against the packaged JSON
schema (config.schema.json). Human units -- MHz as value/2pi for every
rate, mK for temperatures -- are converted exactly once, here, into the
internal rad/us and kelvin used by the rest of the package.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Optional

import numpy as np
import yaml
from jsonschema import Draft202012Validator

from .model import TWO_PI, ModeIndex, SystemParams, cavity, magnon
from .steady import DEFAULT_STABILITY_MARGIN
from .sweep import SweepAxis, SweepSpec


class ConfigError(ValueError):
    """A config document failed validation or is internally inconsistent."""


_LABELS = {"a1": cavity(1), "a2": cavity(2), "a3": cavity(3),
           "m1": magnon(1), "m2": magnon(2), "m3": magnon(3)}


def _schema() -> dict:
    text = resources.files("cavmag").joinpath("config.schema.json").read_text("utf-8")
    return json.loads(text)


def validate_config(cfg: dict) -> None:
    """Validate a parsed config; raises ConfigError naming each bad key path."""
    if not isinstance(cfg, dict):
        raise ConfigError("config document must be a mapping")
    errors = sorted(Draft202012Validator(_schema()).iter_errors(cfg),
                    key=lambda e: list(e.absolute_path))
    if errors:
        lines = []
        for err in errors:
            path = ".".join(str(p) for p in err.absolute_path) or "<root>"
            lines.append(f"  at {path}: {err.message}")
        raise ConfigError("invalid config:\n" + "\n".join(lines))


def load_config(path) -> dict:
    """Read and validate a YAML/JSON config file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            cfg = yaml.safe_load(fh)
    except (FileNotFoundError, IsADirectoryError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except yaml.YAMLError as exc:
        raise ConfigError(f"cannot parse {path}: {exc}") from exc
    validate_config(cfg)
    return cfg


def build_params(cfg: dict) -> SystemParams:
    """SystemParams (internal units) from a validated config document."""
    p = cfg["parameters"]
    opa = sorted(p.get("opa_cavities", []))
    g_strength = float(p.get("G", 0.0))
    G = tuple(g_strength if (j + 1) in opa else 0.0 for j in range(3))
    omega = list(p.get("Omega", [0.0, 0.0, 0.0]))
    if not cfg.get("options", {}).get("keep_linear_drives_with_opa", True):
        omega = [0.0 if (j + 1) in opa else omega[j] for j in range(3)]

    def freq3(name, default=None):
        vals = p.get(name, default)
        return tuple(float(v) * TWO_PI for v in vals)

    try:
        return SystemParams(
            omega_a=freq3("omega_a"),
            omega_m=freq3("omega_m"),
            delta_a=freq3("delta_a", [0.0, 0.0, 0.0]),
            delta_m=freq3("delta_m", [0.0, 0.0, 0.0]),
            g=freq3("g"),
            kappa=freq3("kappa"),
            gamma=freq3("gamma"),
            J12=float(p["J12"]) * TWO_PI,
            J23=float(p["J23"]) * TWO_PI,
            G=tuple(v * TWO_PI for v in G),
            Omega=tuple(v * TWO_PI for v in omega),
            T=float(p.get("temperature_mK", 0.0)) * 1e-3,
        )
    except ValueError as exc:
        raise ConfigError(f"invalid parameters: {exc}") from exc


def stability_margin(cfg: dict) -> float:
    return float(cfg.get("tolerances", {}).get("stability_margin",
                                               DEFAULT_STABILITY_MARGIN))


def tripartite_triple(cfg: dict) -> tuple[ModeIndex, ...]:
    labels = cfg.get("options", {}).get("tripartite_triple", ["m1", "m2", "m3"])
    return tuple(_LABELS[l] for l in labels)


def build_sweep_spec(cfg: dict, grid_override: Optional[int] = None) -> SweepSpec:
    """SweepSpec from the config's sweep block (required here)."""
    if "sweep" not in cfg:
        raise ConfigError("config has no 'sweep' block")
    block = cfg["sweep"]

    def axis(key):
        if key not in block:
            return None
        a = block[key]
        points = grid_override if grid_override else a["points"]
        try:
            return SweepAxis(path=a["path"], lower=float(a["lower"]),
                             upper=float(a["upper"]), points=int(points))
        except ValueError as exc:
            raise ConfigError(f"invalid sweep {key}: {exc}") from exc

    try:
        return SweepSpec(
            base=build_params(cfg),
            axis1=axis("axis1"),
            axis2=axis("axis2"),
            constraint=block.get("constraint", "none"),
            quantities=tuple(block["quantities"]),
            margin=stability_margin(cfg),
            triple=tripartite_triple(cfg),
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


@dataclass(frozen=True)
class TemperaturePlan:
    temperatures_mK: np.ndarray
    operating_points: dict[str, tuple[float, float]]


def build_temperature_plan(cfg: dict, grid_override: Optional[int] = None,
                           ) -> TemperaturePlan:
    if "temperature" not in cfg:
        raise ConfigError("config has no 'temperature' block")
    block = cfg["temperature"]
    lo, hi = float(block["lower_mK"]), float(block["upper_mK"])
    if not lo < hi:
        raise ConfigError("temperature: lower_mK must be < upper_mK")
    points = grid_override if grid_override else int(block["points"])
    ops = {name: (float(op["delta_a1"]), float(op["delta_m1"]))
           for name, op in block["operating_points"].items()}
    return TemperaturePlan(temperatures_mK=np.linspace(lo, hi, points),
                           operating_points=ops)


# ---------------------------------------------------------------------------
# Internal-unit round trip (debug dump of resolved parameters)

def params_to_dict(p: SystemParams) -> dict:
    """Resolved parameters in internal units (rad/us, K); exact round trip."""
    return {
        "units": {"rates": "rad/us", "temperature": "K"},
        "omega_a": list(p.omega_a), "omega_m": list(p.omega_m),
        "delta_a": list(p.delta_a), "delta_m": list(p.delta_m),
        "g": list(p.g), "kappa": list(p.kappa), "gamma": list(p.gamma),
        "J12": p.J12, "J23": p.J23,
        "G": list(p.G), "Omega": list(p.Omega), "T": p.T,
    }


def params_from_dict(d: dict) -> SystemParams:
    fields = {k: v for k, v in d.items() if k != "units"}
    return SystemParams(**{k: tuple(v) if isinstance(v, list) else v
                           for k, v in fields.items()})
