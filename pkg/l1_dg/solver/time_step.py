import logging
import numpy as np

l1dg_logger = logging.getLogger("l1_dg")


def compute_dt(state, mesh, element, cfl, max_speed_fn, t_end=None):
    """cfl * min(2 J) / ((2p + 1) * max speed), shortened to land exactly on t_end."""
    if not cfl > 0.0:
        raise ValueError(f"CFL number must be positive, got {cfl}")

    smallest_element = cfl * float(np.min(2.0 * mesh.jacobians))
    speed = float(np.max(np.asarray(max_speed_fn(state.values))))
    if speed > 0.0:
        dt = smallest_element / ((2 * element.degree + 1) * speed)
    else:
        l1dg_logger.warning(f"Zero wave speed at t={state.time}, falling back to dt={smallest_element}")
        dt = smallest_element

    if t_end is not None:
        dt = min(dt, t_end - float(state.time))
    return dt
