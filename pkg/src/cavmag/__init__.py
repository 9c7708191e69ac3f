"""Steady-state Gaussian entanglement in driven three-cavity / three-magnon networks.

The package builds the linear quadrature model of a three-cavity chain with
one magnon mode per cavity, optional intracavity parametric drives and
coherent drives, solves the Lyapunov equation for the stationary covariance
matrix, and evaluates bipartite log-negativity and the minimum residual
contangle over parameter grids.
"""

from .config import (ConfigError, build_params, build_sweep_spec,
                     build_temperature_plan, load_config, params_from_dict,
                     params_to_dict, validate_config)
from .entanglement import (CovarianceMatrix, log_negativity,
                           log_negativity_pair, magnon_triple_contangle,
                           one_vs_two_log_negativity, residual_contangle,
                           steady_covariance, symplectic_eigenvalues,
                           symplectic_form)
from .linalg import (LinalgError, UnstableSystemError, eigvals, solve_linear,
                     solve_lyapunov)
from .model import (HBAR, K_B, MAGNON_TRIPLE, MODE_ORDER, TWO_PI, LinearModel,
                    ModeIndex, SystemParams, apply_detuning_constraints,
                    build_diffusion, build_drift_matrix, build_drive_vector,
                    build_linear_model, cavity, magnon, power_from_rabi,
                    rabi_from_power, thermal_occupation)
from .presets import PRESETS, preset_config
from .steady import (DEFAULT_STABILITY_MARGIN, MeanField, StabilityReport,
                     WeakExcitationCheck, spectral_abscissa, stability_report,
                     steady_means, weak_excitation_check)
from .sweep import (EntanglementReport, SweepAxis, SweepSpec, SweepTable,
                    evaluate_point, find_max, parameter_paths,
                    quantity_columns, run_sweep, set_param, temperature_sweep)

__version__ = "0.1.0"
