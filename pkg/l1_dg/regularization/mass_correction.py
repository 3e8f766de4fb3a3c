import jax.numpy as jnp


def mean_coefficient(nodal, element):
    return element.to_modal(nodal)[..., 0]


def mass_correct(original, sparse, element):
    """Replaces the Legendre mean of `sparse` with the one of `original`."""
    modal = element.to_modal(sparse)
    modal = modal.at[..., 0].set(mean_coefficient(original, element))
    return element.to_nodal(modal)


def element_mass(nodal, element):
    return jnp.sum(jnp.asarray(nodal) * element.weights, axis=-1)
