import jax
import jax.numpy as jnp

from l1_dg.regularization.regularization_mode import RegularizationMode
from l1_dg.regularization.admm import admm_iterate
from l1_dg.regularization.mass_correction import mass_correct
from l1_dg.sensor.pa_sensor import sensor_readings


class ElementRegularizer:
    """One sensor + sparse reconstruction pass over every component and element.

    Each (component, element) slice is read and written independently. Slices the sensor
    leaves untouched come back bitwise unchanged.
    """
    def __init__(self, element, mode, sensor_config, admm_params, pa_low, pa_high, pa_regularization):
        if mode not in RegularizationMode.ALL:
            raise ValueError(f"Unknown regularization mode: {mode}")
        self.element = element
        self.mode = mode
        self.sensor_config = sensor_config
        self.admm_params = admm_params
        self.pa_low = pa_low
        self.pa_high = pa_high
        self.pa_regularization = pa_regularization

        self._regularize_jit = jax.jit(self._regularize)


    def __call__(self, values):
        """Returns (values, sensor readings, number of diverged element solves)."""
        return self._regularize_jit(values)


    def _regularize(self, values):
        readings = sensor_readings(values, self.pa_low, self.pa_high, self.sensor_config)
        if self.mode == RegularizationMode.NONE:
            return values, readings, jnp.int32(0)

        shape = values.shape
        flat = values.reshape(-1, shape[-1])
        lam = readings.lam.reshape(-1)
        troubled = lam > 0.0

        def solve(flat):
            # every slice is solved so the vmapped shapes stay static under jit; where() keeps the untroubled ones
            mu = 2.0 / jnp.where(troubled, lam, 1.0)
            solve_one = lambda data, mu: admm_iterate(data, self.pa_regularization, self.admm_params.replace(mu=mu))
            sparse, diverged_at = jax.vmap(solve_one)(flat, mu)
            if self.mode == RegularizationMode.L1_MASS_CORRECTED:
                sparse = mass_correct(flat, sparse, self.element)
            regularized = jnp.where(troubled[:, None], sparse, flat)
            nr_diverged = jnp.sum(troubled & (diverged_at >= 0)).astype(jnp.int32)
            return regularized, nr_diverged

        def skip(flat):
            return flat, jnp.int32(0)

        flat, nr_diverged = jax.lax.cond(jnp.any(troubled), solve, skip, flat)
        return flat.reshape(shape), readings, nr_diverged
