import jax.numpy as jnp
from flax import struct

from l1_dg.annihilation.pa_matrix import apply_pa


@struct.dataclass
class SensorConfig:
    kappa: float = 0.8
    lambda_max: float = 400.0
    s1_floor: float = 1e-10
    order_low: int = struct.field(pytree_node=False, default=1)
    order_high: int = struct.field(pytree_node=False, default=3)


    def validate(self, degree=None):
        if not 0.0 <= self.kappa < 1.0:
            raise ValueError(f"Ramp parameter kappa must lie in [0, 1), got {self.kappa}")
        if not self.lambda_max > 0.0:
            raise ValueError(f"lambda_max must be positive, got {self.lambda_max}")
        if not self.s1_floor > 0.0:
            raise ValueError(f"s1_floor must be positive, got {self.s1_floor}")
        if not 1 <= self.order_low < self.order_high:
            raise ValueError(f"Sensor orders must satisfy 1 <= order_low < order_high, got {self.order_low}, {self.order_high}")
        if degree is not None and self.order_high > degree:
            raise ValueError(f"Sensor order {self.order_high} exceeds polynomial degree {degree}")
        return self


@struct.dataclass
class SensorReading:
    s1: float
    s3: float
    ratio: float
    lam: float
    troubled: bool


def ramp(ratio, kappa, lambda_max):
    """Zero up to kappa, linear on (kappa, 1), lambda_max from 1 on."""
    linear = lambda_max * (ratio - kappa) / (1.0 - kappa)
    return jnp.where(ratio <= kappa, 0.0, jnp.where(ratio >= 1.0, lambda_max, linear))


def sensor_values(nodal, pa1, pa3):
    s1 = jnp.max(jnp.abs(apply_pa(pa1, nodal)), axis=-1)
    s3 = jnp.max(jnp.abs(apply_pa(pa3, nodal)), axis=-1)
    return s1, s3


def _strength(s1, s3, cfg, scale):
    floor = cfg.s1_floor * (1.0 + scale)
    smooth = s1 <= floor
    ratio = jnp.where(smooth, 0.0, s3 / jnp.where(smooth, 1.0, s1))
    lam = ramp(ratio, cfg.kappa, cfg.lambda_max)
    return ratio, lam


def regularization_strength(s1, s3, cfg, scale=0.0):
    """Maps the sensor values of one element to its reading.

    `scale` is max |nodal| of the element; below s1_floor * (1 + scale) the element is smooth.
    """
    ratio, lam = _strength(jnp.asarray(s1), jnp.asarray(s3), cfg, scale)
    return SensorReading(s1=float(s1), s3=float(s3), ratio=float(ratio), lam=float(lam), troubled=bool(lam > 0.0))


def sensor_readings(values, pa_low, pa_high, cfg):
    """Batched readings over every leading axis of `values` (components, elements)."""
    s1, s3 = sensor_values(values, pa_low, pa_high)
    scale = jnp.max(jnp.abs(values), axis=-1)
    ratio, lam = _strength(s1, s3, cfg, scale)
    return SensorReading(s1=s1, s3=s3, ratio=ratio, lam=lam, troubled=lam > 0.0)
