"""Discrete-velocity kinetic simulator for two-group pedestrian crowds.

Distribution functions over position and a discrete velocity lattice evolve
under free transport plus binary stochastic interactions (turn toward the
target / follow the stream, adjust the speed modulus), integrated by an
operator-splitting scheme with upwind transport.
"""

__version__ = "0.1.0"

from .contour import support_contour
from .diagnostics import Diagnostics, compute_diagnostics
from .games import (GameParams, SpeedDistribution, TurnDistribution, eta,
                    speed_table, speed_tensor, transition_prob, turn_row,
                    turn_table, turn_tensor)
from .grid import (Grid2D, StateField, VelocityGrid, build_velocity_grid,
                   cell_center, make_grid, total_mass)
from .kinetics import (MomentField, VisibilityZone, collision, moments,
                       target_angle, target_angle_field, visibility_average)
from .output import read_frame, write_frame, write_pgm
from .scenario import (Scenario, ScenarioError, apply_overrides,
                       builtin_document, case_study_1, case_study_2,
                       parse_scenario, render_scenario, scenario_to_dict,
                       validate_scenario)
from .solver import (RunResult, SolverError, StepConfig, advect_x, advect_y,
                     advection_convergence, react, run, step)

__all__ = [
    "Diagnostics", "GameParams", "Grid2D", "MomentField", "RunResult",
    "Scenario", "ScenarioError", "SolverError", "SpeedDistribution",
    "StateField", "StepConfig", "TurnDistribution", "VelocityGrid",
    "VisibilityZone", "advect_x", "advect_y", "advection_convergence",
    "apply_overrides", "build_velocity_grid", "builtin_document",
    "case_study_1", "case_study_2", "cell_center", "collision",
    "compute_diagnostics", "eta", "make_grid", "moments", "parse_scenario",
    "react", "read_frame", "render_scenario", "run", "scenario_to_dict",
    "speed_table", "speed_tensor", "step", "support_contour",
    "target_angle", "target_angle_field", "total_mass", "transition_prob",
    "turn_row", "turn_table", "turn_tensor", "validate_scenario",
    "visibility_average", "write_frame", "write_pgm",
]
