"""Built-in figure-reproduction presets, in the human units of the config schema.

All rates and detunings are the value divided by 2*pi, in MHz; temperatures
in mK. The shared base set: cavity and magnon modes at 10 GHz, couplings
g = 20, kappa = 5, gamma = 1, J12 = J23 = 12, bath at 20 mK, coherent drives
of 1 MHz on cavities 2 and 3. Detuning grids span +-38 in units of
gamma/2pi = 1 MHz, wide enough to contain every quoted optimum while staying
inside the stable region.
"""

from __future__ import annotations

import copy

DETUNING_SPAN = 38.0
GRID_POINTS = 121

_BASE_PARAMETERS = {
    "omega_a": [10000.0, 10000.0, 10000.0],
    "omega_m": [10000.0, 10000.0, 10000.0],
    "delta_a": [0.0, 0.0, 0.0],
    "delta_m": [0.0, 0.0, 0.0],
    "g": [20.0, 20.0, 20.0],
    "kappa": [5.0, 5.0, 5.0],
    "gamma": [1.0, 1.0, 1.0],
    "J12": 12.0,
    "J23": 12.0,
    "Omega": [0.0, 1.0, 1.0],
    "temperature_mK": 20.0,
}

_DETUNING_SWEEP = {
    "axis1": {"path": "delta_a1", "lower": -DETUNING_SPAN,
              "upper": DETUNING_SPAN, "points": GRID_POINTS},
    "axis2": {"path": "delta_m1", "lower": -DETUNING_SPAN,
              "upper": DETUNING_SPAN, "points": GRID_POINTS},
    "constraint": "linked_detunings",
}

# Fixed operating point of the gain/decay sweep.
_FIG4_DELTA_A = [-10.0, -10.0, 10.0]
_FIG4_DELTA_M = [10.0, 10.0, -10.0]

# Temperature-scan operating points (delta_a1, delta_m1), MHz.
FIG7_OPERATING_POINTS = {
    "E_m1m2": {"delta_a1": 12.0, "delta_m1": 0.0},
    "E_m1m3": {"delta_a1": 0.0, "delta_m1": 0.0},
    "E_m2m3": {"delta_a1": 9.0, "delta_m1": -22.0},
    "R_min": {"delta_a1": 0.0, "delta_m1": 0.0},
}

PRESETS: dict[str, dict] = {
    # occupations, single parametric drive
    "fig2": {
        "parameters": {**_BASE_PARAMETERS, "opa_cavities": [1], "G": 4.5},
        "sweep": {**_DETUNING_SWEEP, "quantities": ["N_a", "N_m"]},
        "output": {"path": "fig2.csv"},
    },
    # entanglement vs detunings, single parametric drive
    "fig3": {
        "parameters": {**_BASE_PARAMETERS, "opa_cavities": [1], "G": 4.5},
        "sweep": {**_DETUNING_SWEEP, "quantities": ["E_pairs", "R_min"]},
        "output": {"path": "fig3.csv"},
    },
    # entanglement vs gain and cavity-1 decay at fixed detunings
    "fig4": {
        "parameters": {**_BASE_PARAMETERS, "opa_cavities": [1], "G": 4.5,
                       "delta_a": _FIG4_DELTA_A, "delta_m": _FIG4_DELTA_M},
        "sweep": {
            "axis1": {"path": "G1", "lower": 0.0, "upper": 20.0,
                      "points": GRID_POINTS},
            "axis2": {"path": "kappa1", "lower": 1.0, "upper": 10.0,
                      "points": GRID_POINTS},
            "constraint": "none",
            "quantities": ["E_pairs", "R_min"],
        },
        "output": {"path": "fig4.csv"},
    },
    # entanglement vs detunings, parametric drives in cavities 1 and 2
    "fig5": {
        "parameters": {**_BASE_PARAMETERS, "opa_cavities": [1, 2], "G": 2.6},
        "sweep": {**_DETUNING_SWEEP, "quantities": ["E_pairs", "R_min"]},
        "output": {"path": "fig5.csv"},
    },
    # entanglement vs detunings, parametric drives in all three cavities
    "fig6": {
        "parameters": {**_BASE_PARAMETERS, "opa_cavities": [1, 2, 3], "G": 2.6},
        "sweep": {**_DETUNING_SWEEP, "quantities": ["E_pairs", "R_min"]},
        "output": {"path": "fig6.csv"},
    },
    # entanglement vs bath temperature, triple parametric drive
    "fig7": {
        "parameters": {**_BASE_PARAMETERS, "opa_cavities": [1, 2, 3], "G": 2.6},
        "temperature": {
            "lower_mK": 20.0,
            "upper_mK": 300.0,
            "points": 57,
            "operating_points": FIG7_OPERATING_POINTS,
        },
        "output": {"path": "fig7.csv"},
    },
}


def preset_config(figure_id: str) -> dict:
    """A deep copy of the named preset's config document."""
    if figure_id not in PRESETS:
        raise KeyError(f"unknown figure id {figure_id!r}; "
                       f"available: {', '.join(sorted(PRESETS))}")
    return copy.deepcopy(PRESETS[figure_id])
