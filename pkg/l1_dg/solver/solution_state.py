import jax
import jax.numpy as jnp
from flax import struct


@struct.dataclass
class SolutionState:
    """Nodal values of shape (components, elements, p + 1) at a given time."""
    values: jax.Array
    time: float


    @property
    def components(self):
        return self.values.shape[0]


def is_finite(state):
    return bool(jnp.all(jnp.isfinite(state.values)))
