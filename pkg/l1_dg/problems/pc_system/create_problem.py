import math
import numpy as np

from l1_dg.solver.problem_def import ProblemDef
from l1_dg.solver.polynomial_chaos import pc_physical_flux, pc_max_speed, pc_system_rhs
from l1_dg.problems.pc_system.general_properties import GeneralProperties

BUMP_CENTER = 0.5
BUMP_RADIUS = 0.5


def bump(x):
    """Smooth compact bump e * exp(-r^2 / (r^2 - (x - c)^2)), peak value 1 at the center."""
    x = np.asarray(x, dtype=np.float64)
    distance_squared = (x - BUMP_CENTER) ** 2
    inside = distance_squared < BUMP_RADIUS ** 2
    denominator = np.where(inside, BUMP_RADIUS ** 2 - distance_squared, 1.0)
    return np.where(inside, math.e * np.exp(-BUMP_RADIUS ** 2 / denominator), 0.0)


def pc_initial(x):
    """Mean 1 + bump and first chaos mode bump, stacked along the first axis."""
    b = bump(x)
    return np.stack([1.0 + b, b])


def create_problem(config):
    return ProblemDef(
        name=config.problem,
        component_count=GeneralProperties.component_count,
        flux=pc_physical_flux,
        max_speed=pc_max_speed,
        initial=pc_initial,
        rhs=pc_system_rhs,
        interface_flux=config.interface_flux,
        allowed_interface_fluxes=GeneralProperties.interface_flux_types,
    )
