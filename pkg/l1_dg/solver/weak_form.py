import jax.numpy as jnp

from l1_dg.solver.numerical_flux import llf_flux, interface_states, face_fluxes


def _lift(element, left, right):
    """M^-1 R^T B applied to per-element face values, shape (..., elements) -> (..., elements, p + 1)."""
    surface = jnp.zeros(left.shape + (element.nr_nodes,), dtype=left.dtype)
    surface = surface.at[..., 0].set(-left / element.weights[0])
    return surface.at[..., -1].set(right / element.weights[-1])


def weak_form_rates(values, element, mesh, problem):
    """(1/J) M^-1 (D^T M f - R^T B f_num) for every component and element."""
    f = problem.flux(values)
    u_left, u_right = interface_states(values)
    f_num_left, f_num_right = face_fluxes(llf_flux(u_left, u_right, problem))

    weak_derivative = element.diff.T * element.weights[None, :] / element.weights[:, None]
    volume = jnp.einsum("kj,...j->...k", weak_derivative, f)
    surface = _lift(element, f_num_left, f_num_right)
    return (volume - surface) / mesh.jacobians[:, None]


def dg_rhs_scalar(state, element, mesh, problem):
    if state.components != 1:
        raise ValueError(f"The scalar weak form needs exactly one component, got {state.components}")
    return weak_form_rates(state.values, element, mesh, problem)


def strong_form_rates(values, element, mesh, problem):
    """(1/J) (-D f - M^-1 R^T B (f_num - R f)), equal to the weak form through summation by parts."""
    f = problem.flux(values)
    u_left, u_right = interface_states(values)
    f_num_left, f_num_right = face_fluxes(llf_flux(u_left, u_right, problem))

    volume = -jnp.einsum("kj,...j->...k", element.diff, f)
    surface = _lift(element, f_num_left - f[..., 0], f_num_right - f[..., -1])
    return (volume - surface) / mesh.jacobians[:, None]
