import numpy as np
import jax.numpy as jnp

from l1_dg.solver.problem_def import ProblemDef
from l1_dg.solver.weak_form import weak_form_rates
from l1_dg.problems.advection.general_properties import GeneralProperties

PERIOD = 2.0


def advection_initial(x):
    return np.sin(2.0 * np.pi * np.asarray(x))


def advection_reference(x, t):
    """Unit-speed transport of sin(2 pi x) on the periodic domain [0, 2]."""
    return np.sin(2.0 * np.pi * np.mod(np.asarray(x) - t, PERIOD))


def create_problem(config):
    return ProblemDef(
        name=config.problem,
        component_count=GeneralProperties.component_count,
        flux=lambda u: u,
        max_speed=lambda u: jnp.ones_like(u[0]),
        initial=lambda x: advection_initial(x)[None],
        rhs=weak_form_rates,
        reference=lambda x, t: advection_reference(x, t)[None],
        interface_flux=config.interface_flux,
        allowed_interface_fluxes=GeneralProperties.interface_flux_types,
    )
