import numpy as np
import jax.numpy as jnp

from l1_dg.solver.interface_flux_type import InterfaceFluxType
from l1_dg.solver.numerical_flux import interface_states, face_fluxes
from l1_dg.solver.weak_form import _lift


def pc_triple_products():
    """<phi_i phi_j phi_k> for the first two normalized probabilists' Hermite polynomials."""
    products = np.zeros((2, 2, 2))
    products[0, 0, 0] = 1.0
    products[0, 1, 1] = 1.0
    products[1, 0, 1] = 1.0
    products[1, 1, 0] = 1.0
    return products


TRIPLE_PRODUCTS = pc_triple_products()


def pc_physical_flux(u):
    """f_k = 1/2 sum_ij <phi_i phi_j phi_k> u_i u_j, i.e. (1/2 (u_0^2 + u_1^2), u_0 u_1)."""
    return 0.5 * jnp.einsum("ijk,i...,j...->k...", TRIPLE_PRODUCTS, u, u)


def pc_max_speed(u):
    # eigenvalues of [[u_0, u_1], [u_1, u_0]]
    return jnp.maximum(jnp.abs(u[0] + u[1]), jnp.abs(u[0] - u[1]))


def pc_entropy_conservative_flux(u_left, u_right):
    a, b = u_left, u_right
    ab = a[:, None] * b[None, :]
    mixed = 0.5 * (ab + jnp.swapaxes(ab, 0, 1))
    # grouped so that swapping a and b reproduces every rounding step
    quadratic = (a[:, None] * a[None, :] + b[:, None] * b[None, :]) + mixed
    return jnp.einsum("ijk,ij...->k...", TRIPLE_PRODUCTS, quadratic) / 6.0


def pc_interface_flux(u_left, u_right, mode):
    if mode not in InterfaceFluxType.ALL:
        raise ValueError(f"Unknown interface flux: {mode}")
    alpha = jnp.maximum(pc_max_speed(u_left), pc_max_speed(u_right))
    if mode == InterfaceFluxType.LOCAL_LAX_FRIEDRICHS:
        return 0.5 * (pc_physical_flux(u_left) + pc_physical_flux(u_right)) - 0.5 * alpha * (u_right - u_left)
    flux = pc_entropy_conservative_flux(u_left, u_right)
    if mode == InterfaceFluxType.ENTROPY_STABLE:
        flux = flux - 0.5 * alpha * (u_right - u_left)
    return flux


def pc_system_rhs(values, element, mesh, problem):
    """Skew-symmetric semidiscretization of the two-component polynomial chaos Burgers system."""
    if values.shape[0] != 2:
        raise ValueError(f"The polynomial chaos system has two components, got {values.shape[0]}")

    products = values[:, None] * values[None, :]
    derivative = jnp.einsum("kl,i...l->i...k", element.diff, values)
    derivative_of_products = jnp.einsum("kl,ij...l->ij...k", element.diff, products)
    split = derivative_of_products + values[None, :] * derivative[:, None]
    volume = -jnp.einsum("ijk,ij...->k...", TRIPLE_PRODUCTS, split) / 3.0

    u_left, u_right = interface_states(values)
    f_num_left, f_num_right = face_fluxes(pc_interface_flux(u_left, u_right, problem.interface_flux))

    def boundary_flux(trace):
        trace_products = trace[:, None] * trace[None, :]
        # R(u_i u_j) and (R u_i)(R u_j) coincide on Gauss-Lobatto nodes
        return jnp.einsum("ijk,ij...->k...", TRIPLE_PRODUCTS, trace_products / 3.0 + trace_products / 6.0)

    surface = _lift(
        element,
        f_num_left - boundary_flux(values[..., 0]),
        f_num_right - boundary_flux(values[..., -1]),
    )
    return (volume - surface) / mesh.jacobians[:, None]
