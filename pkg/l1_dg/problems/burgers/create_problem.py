import math
import numpy as np
import jax.numpy as jnp

from l1_dg.solver.problem_def import ProblemDef
from l1_dg.solver.weak_form import weak_form_rates
from l1_dg.problems.burgers.general_properties import GeneralProperties

NEWTON_TOLERANCE = 1e-13
NEWTON_MAX_ITERATIONS = 100
SHOCK_TIME = 1.0 / math.pi


class ReferenceSolutionError(RuntimeError):
    pass


def burgers_initial(x):
    return np.sin(np.pi * np.asarray(x))


def _left_branch(x, t):
    """Root of u = sin(pi (x - u t)) for x in [0, 1], carried by characteristics from [0, 1].

    The bracket [lower, upper] keeps the foot x - u t inside [0, 1], where the root is unique.
    At x = 1 after the shock has formed, u = 0 is excluded so the left limit is returned.
    """
    residual = lambda u: u - math.sin(math.pi * (x - u * t))
    slope = lambda u: 1.0 + math.pi * t * math.cos(math.pi * (x - u * t))

    lower, upper = 0.0, min(1.0, x / t)
    if x == 1.0 and t > SHOCK_TIME:
        lower = 1e-8
    if residual(lower) >= 0.0:
        return lower

    u = min(max(math.sin(math.pi * x), lower), upper)
    for _ in range(NEWTON_MAX_ITERATIONS):
        value = residual(u)
        if value < 0.0:
            lower = u
        else:
            upper = u
        derivative = slope(u)
        candidate = u - value / derivative if derivative != 0.0 else lower - 1.0
        if not lower < candidate < upper:
            candidate = 0.5 * (lower + upper)
        if abs(candidate - u) < NEWTON_TOLERANCE:
            return candidate
        u = candidate
    raise ReferenceSolutionError(f"Characteristic tracing did not converge at x={x}, t={t}")


def _reference_point(x, t):
    if t == 0.0:
        return math.sin(math.pi * x)
    x = x % 2.0
    if x <= 1.0:
        return _left_branch(x, t)
    # odd symmetry about x = 1
    return -_left_branch(2.0 - x, t)


def burgers_reference(x, t):
    """Entropy solution of Burgers' equation with sin(pi x) data on the periodic domain [0, 2]."""
    if not 0.0 <= t <= 0.5:
        raise ValueError(f"Burgers reference is available for 0 <= t <= 0.5, got {t}")
    return np.vectorize(_reference_point, otypes=[np.float64])(np.asarray(x, dtype=np.float64), float(t))


def create_problem(config):
    return ProblemDef(
        name=config.problem,
        component_count=GeneralProperties.component_count,
        flux=lambda u: 0.5 * u ** 2,
        max_speed=lambda u: jnp.abs(u[0]),
        initial=lambda x: burgers_initial(x)[None],
        rhs=weak_form_rates,
        reference=lambda x, t: burgers_reference(x, t)[None],
        interface_flux=config.interface_flux,
        allowed_interface_fluxes=GeneralProperties.interface_flux_types,
    )
