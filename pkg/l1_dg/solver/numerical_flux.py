import jax.numpy as jnp


def llf_flux(u_left, u_right, problem):
    """Local Lax-Friedrichs flux, component axis first."""
    alpha = jnp.maximum(problem.max_speed(u_left), problem.max_speed(u_right))
    return 0.5 * (problem.flux(u_left) + problem.flux(u_right)) - 0.5 * alpha * (u_right - u_left)


def interface_states(values):
    """States left and right of every element's left face, periodic.

    Face i sits between element i - 1 and element i. Shapes are (components, elements).
    """
    u_left = jnp.roll(values[..., -1], 1, axis=-1)
    u_right = values[..., 0]
    return u_left, u_right


def face_fluxes(face_values):
    """Splits per-face fluxes into (flux at left end, flux at right end) of every element."""
    return face_values, jnp.roll(face_values, -1, axis=-1)
