import itertools
import numpy as np
import jax.numpy as jnp
import pytest

from l1_dg.element.reference_element import build_reference_element
from l1_dg.element.mesh import build_mesh
from l1_dg.problems.problem_manager import get_problem_create_problem
from l1_dg.solver.interface_flux_type import InterfaceFluxType
from l1_dg.solver.solution_state import SolutionState
from l1_dg.solver.ssprk import ssprk33_step
from l1_dg.solver.polynomial_chaos import (
    pc_triple_products, pc_physical_flux, pc_max_speed, pc_entropy_conservative_flux, pc_interface_flux, pc_system_rhs,
)


def _system(make_config, interface_flux):
    return get_problem_create_problem("pc-system")(make_config(problem="pc-system", interface_flux=interface_flux))


def test_triple_products():
    products = pc_triple_products()
    for i, j, k in itertools.product(range(2), repeat=3):
        expected = 1.0 if (i + j + k) in (0, 2) else 0.0
        assert products[i, j, k] == expected


@pytest.mark.parametrize("u, expected", [((1.0, 0.0), 1.0), ((0.0, 0.0), 0.0), ((1.0, 2.0), 3.0)])
def test_max_speed(u, expected):
    assert float(pc_max_speed(jnp.asarray(u))) == expected


def test_physical_flux_matches_system():
    u = jnp.asarray(np.random.default_rng(0).normal(size=(2, 7)))
    expected = np.stack([0.5 * (u[0] ** 2 + u[1] ** 2), u[0] * u[1]])
    np.testing.assert_allclose(pc_physical_flux(u), expected, atol=1e-14)


@pytest.mark.parametrize("mode", InterfaceFluxType.ALL)
def test_interface_flux_consistency(mode):
    u = jnp.asarray([[0.4, -1.2], [1.1, 0.3]])
    np.testing.assert_allclose(pc_interface_flux(u, u, mode), pc_physical_flux(u), atol=1e-14)


def test_entropy_conservative_flux_examples():
    a, b = jnp.asarray([0.8, 0.0]), jnp.asarray([-0.3, 0.0])
    flux = pc_interface_flux(a, b, InterfaceFluxType.ENTROPY_CONSERVATIVE)
    assert float(flux[0]) == pytest.approx((0.8 ** 2 + 0.8 * -0.3 + 0.3 ** 2) / 6.0)
    assert float(flux[1]) == 0.0


def test_entropy_conservative_flux_is_symmetric():
    rng = np.random.default_rng(1)
    for _ in range(20):
        a, b = jnp.asarray(rng.normal(size=2)), jnp.asarray(rng.normal(size=2))
        np.testing.assert_array_equal(pc_entropy_conservative_flux(a, b), pc_entropy_conservative_flux(b, a))


def test_entropy_stable_flux():
    flux = pc_interface_flux(jnp.asarray([1.0, 0.0]), jnp.asarray([-1.0, 0.0]), InterfaceFluxType.ENTROPY_STABLE)
    np.testing.assert_allclose(flux, [7.0 / 6.0, 0.0], atol=1e-14)

    rng = np.random.default_rng(2)
    for _ in range(20):
        a, b = jnp.asarray(rng.normal(size=2)), jnp.asarray(rng.normal(size=2))
        dissipation = pc_entropy_conservative_flux(a, b) - pc_interface_flux(a, b, InterfaceFluxType.ENTROPY_STABLE)
        # Q (b - a) with Q = alpha / 2 * I, positive semidefinite
        assert float(jnp.dot(b - a, dissipation)) >= 0.0


def test_rejects_unknown_flux():
    with pytest.raises(ValueError):
        pc_interface_flux(jnp.zeros(2), jnp.zeros(2), "roe")


@pytest.mark.parametrize("mode", InterfaceFluxType.ALL)
def test_constant_state_is_steady(mode, make_config):
    problem = _system(make_config, mode)
    element, mesh = build_reference_element(6), build_mesh(0.0, 2.0, 5)
    values = jnp.stack([jnp.full((5, 7), 1.3), jnp.full((5, 7), -0.4)])
    np.testing.assert_allclose(pc_system_rhs(values, element, mesh, problem), 0.0, atol=1e-12)

    state = SolutionState(values=values, time=0.0)
    rhs_fn = lambda v: pc_system_rhs(v, element, mesh, problem)
    for _ in range(100):
        state = ssprk33_step(state, rhs_fn, 0.005)
    np.testing.assert_allclose(state.values[0], 1.3, atol=1e-11)
    np.testing.assert_allclose(state.values[1], -0.4, atol=1e-11)


def test_vanishing_chaos_mode_reduces_to_scalar_burgers(make_config):
    problem = _system(make_config, InterfaceFluxType.ENTROPY_CONSERVATIVE)
    element, mesh = build_reference_element(5), build_mesh(0.0, 2.0, 4)
    u = np.sin(np.pi * mesh.node_coordinates(element)) + 0.3
    rates = np.asarray(pc_system_rhs(jnp.stack([jnp.asarray(u), jnp.zeros_like(u)]), element, mesh, problem))

    # skew-symmetric scalar Burgers with the flux (a^2 + ab + b^2) / 6
    D, w, J = element.diff, element.weights, mesh.jacobians[:, None]
    volume = -(np.einsum("kl,il->ik", D, u ** 2) + u * np.einsum("kl,il->ik", D, u)) / 3.0
    a, b = np.roll(u[:, -1], 1), u[:, 0]
    face = (a ** 2 + a * b + b ** 2) / 6.0
    surface = np.zeros_like(u)
    surface[:, 0] = -(face - 0.5 * u[:, 0] ** 2) / w[0]
    surface[:, -1] = (np.roll(face, -1) - 0.5 * u[:, -1] ** 2) / w[-1]

    np.testing.assert_allclose(rates[0], (volume - surface) / J, atol=1e-11)
    np.testing.assert_allclose(rates[1], 0.0, atol=1e-14)
