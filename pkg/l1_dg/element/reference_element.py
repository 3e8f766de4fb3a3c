import numpy as np
import jax.numpy as jnp
from flax import struct

from l1_dg.element.gauss_lobatto import gauss_lobatto, differentiation_matrix, legendre_table


@struct.dataclass
class ReferenceElement:
    """All degree-p operators on the reference element [-1, 1]."""
    nodes: np.ndarray
    weights: np.ndarray
    mass: np.ndarray
    diff: np.ndarray
    restriction: np.ndarray
    boundary: np.ndarray
    legendre_vandermonde: np.ndarray
    legendre_norms: np.ndarray
    degree: int = struct.field(pytree_node=False)


    @property
    def nr_nodes(self):
        return self.degree + 1


    def to_modal(self, nodal):
        # Discrete projection u_j = <u, P_j>_M / <P_j, P_j>_M, exact inverse of the Vandermonde matrix on Gauss-Lobatto nodes
        weighted = jnp.asarray(nodal) * self.weights
        return jnp.einsum("...k,kj->...j", weighted, self.legendre_vandermonde) / self.legendre_norms


    def to_nodal(self, modal):
        return jnp.einsum("kj,...j->...k", self.legendre_vandermonde, jnp.asarray(modal))


def build_reference_element(p):
    nodes, weights = gauss_lobatto(p)

    restriction = np.zeros((2, p + 1))
    restriction[0, 0] = 1.0
    restriction[1, p] = 1.0

    vandermonde = legendre_table(nodes, p)
    norms = np.einsum("k,kj,kj->j", weights, vandermonde, vandermonde)

    return ReferenceElement(
        nodes=nodes,
        weights=weights,
        mass=np.diag(weights),
        diff=differentiation_matrix(nodes),
        restriction=restriction,
        boundary=np.diag([-1.0, 1.0]),
        legendre_vandermonde=vandermonde,
        legendre_norms=norms,
        degree=p,
    )


def legendre_projection(fn, element, breakpoints=(), quadrature_points=64):
    """Nodal values of the L2 projection of fn onto degree-p polynomials on [-1, 1].

    fn is integrated piecewise between the breakpoints, so jumps located there are resolved exactly.
    """
    edges = [-1.0] + sorted(float(b) for b in breakpoints if -1.0 < b < 1.0) + [1.0]
    gauss_nodes, gauss_weights = np.polynomial.legendre.leggauss(quadrature_points)

    moments = np.zeros(element.nr_nodes)
    for left, right in zip(edges[:-1], edges[1:]):
        half_width = 0.5 * (right - left)
        x = left + half_width * (gauss_nodes + 1.0)
        moments += half_width * np.einsum("q,q,qj->j", gauss_weights, fn(x), legendre_table(x, element.degree))
    # exact norms 2 / (2j + 1) of the continuous projection
    modal = moments * (2.0 * np.arange(element.nr_nodes) + 1.0) / 2.0
    return np.asarray(element.to_nodal(modal))
