import math
import numpy as np
import jax.numpy as jnp
import chex
from flax import struct


NORMALIZATION_THRESHOLD = 1e-12


class DegenerateNormalizationError(ValueError):
    pass


@struct.dataclass
class PAMatrix:
    """Polynomial annihilation operator of order m evaluated at the p collocation midpoints."""
    matrix: np.ndarray
    midpoints: np.ndarray
    order: int = struct.field(pytree_node=False)
    degree: int = struct.field(pytree_node=False)
    stencils: tuple = struct.field(pytree_node=False)


def annihilation_coefficients(stencil):
    """c_j = m! / prod_{i != j} (x_j - x_i), Newton divided differences."""
    stencil = np.asarray(stencil, dtype=np.float64)
    order = len(stencil) - 1
    differences = stencil[:, None] - stencil[None, :]
    np.fill_diagonal(differences, 1.0)
    if np.any(differences == 0.0):
        raise ValueError(f"Annihilation stencil points must be distinct, got {stencil}")
    return math.factorial(order) / np.prod(differences, axis=1)


def normalization_factor(stencil, eval_point, coeffs):
    stencil = np.asarray(stencil, dtype=np.float64)
    q = float(np.sum(np.asarray(coeffs)[stencil >= eval_point]))
    if abs(q) < NORMALIZATION_THRESHOLD:
        raise DegenerateNormalizationError(
            f"Normalization factor {q} vanishes for stencil {stencil} at {eval_point}")
    return q


def select_stencil(nodes, k, m):
    """The m + 1 node indices nearest to the midpoint between nodes k and k + 1.

    Ties go to the lower index. The nearest set is contiguous and always contains k and k + 1.
    """
    midpoint = 0.5 * (nodes[k] + nodes[k + 1])
    ranking = sorted(range(len(nodes)), key=lambda i: (abs(nodes[i] - midpoint), i))
    return tuple(sorted(ranking[:m + 1]))


def build_pa_matrix(element, m):
    p = element.degree
    if not 1 <= m <= p:
        raise ValueError(f"Annihilation order must satisfy 1 <= m <= p={p}, got m={m}")

    nodes = element.nodes
    midpoints = 0.5 * (nodes[:-1] + nodes[1:])
    matrix = np.zeros((p, p + 1))
    stencils = []
    for k in range(p):
        stencil = select_stencil(nodes, k, m)
        points = nodes[list(stencil)]
        coeffs = annihilation_coefficients(points)
        q = normalization_factor(points, midpoints[k], coeffs)
        matrix[k, list(stencil)] = coeffs / q
        stencils.append(stencil)

    return PAMatrix(matrix=matrix, midpoints=midpoints, order=m, degree=p, stencils=tuple(stencils))


def apply_pa(pa, nodal):
    chex.assert_shape(nodal, (..., pa.degree + 1))
    return jnp.einsum("kj,...j->...k", pa.matrix, nodal)


def l1_term(pa, v):
    return jnp.sum(jnp.abs(apply_pa(pa, v)), axis=-1)
