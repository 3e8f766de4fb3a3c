import numpy as np
from flax import struct


@struct.dataclass
class ErrorReport:
    """Global errors of a run; the norms are None when the run broke down."""
    m_norm_error: float = None
    one_norm_error: float = None
    inf_norm_error: float = None
    breakdown: bool = False


def _quadrature(nodal, mesh, element):
    # sum_i J_i sum_k w_k (.)
    return np.einsum("i,k,...ik->...", mesh.jacobians, element.weights, nodal)


def error_norms(state, reference_fn, mesh, element):
    if not np.all(np.isfinite(np.asarray(state.values))):
        return ErrorReport(breakdown=True)

    x = mesh.node_coordinates(element)
    error = np.asarray(state.values) - np.asarray(reference_fn(x, float(state.time)))
    return ErrorReport(
        m_norm_error=float(np.sqrt(_quadrature(error ** 2, mesh, element).sum())),
        one_norm_error=float(_quadrature(np.abs(error), mesh, element).sum()),
        inf_norm_error=float(np.max(np.abs(error))),
    )


def energy(state, mesh, element):
    return 0.5 * float(_quadrature(np.asarray(state.values) ** 2, mesh, element).sum())


def total_mass(state, mesh, element):
    """Discrete mass per component."""
    return _quadrature(np.asarray(state.values), mesh, element)


def total_variation(state, component=0):
    """Total variation of the global nodal trace of one component, elements in order."""
    trace = np.asarray(state.values[component]).reshape(-1)
    return float(np.sum(np.abs(np.diff(trace))))
