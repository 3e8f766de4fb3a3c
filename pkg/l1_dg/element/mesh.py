import numpy as np
from flax import struct


@struct.dataclass
class Mesh:
    boundaries: np.ndarray
    jacobians: np.ndarray
    domain: tuple = struct.field(pytree_node=False)
    element_count: int = struct.field(pytree_node=False)


    @property
    def length(self):
        return self.domain[1] - self.domain[0]


    def node_coordinates(self, element):
        """Physical node positions, shape (element_count, p + 1)."""
        return self.boundaries[:-1, None] + self.jacobians[:, None] * (element.nodes[None, :] + 1.0)


def build_mesh(a, b, element_count):
    if not a < b:
        raise ValueError(f"Mesh domain needs a < b, got [{a}, {b}]")
    if element_count < 1:
        raise ValueError(f"Mesh needs at least one element, got {element_count}")

    boundaries = np.linspace(a, b, element_count + 1)
    boundaries[0] = a
    boundaries[-1] = b
    jacobians = np.full(element_count, (b - a) / (2 * element_count))

    return Mesh(boundaries=boundaries, jacobians=jacobians, domain=(float(a), float(b)), element_count=int(element_count))
