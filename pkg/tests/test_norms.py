import numpy as np
import jax.numpy as jnp
import pytest

from l1_dg.element.reference_element import build_reference_element
from l1_dg.element.mesh import build_mesh
from l1_dg.problems.norms import error_norms, energy, total_mass, total_variation
from l1_dg.solver.solution_state import SolutionState


@pytest.fixture
def grid():
    return build_reference_element(4), build_mesh(0.0, 2.0, 5)


def _constant(value, components=1):
    return SolutionState(values=jnp.full((components, 5, 5), value), time=0.0)


def test_error_norms_of_constant_offset(grid):
    element, mesh = grid
    report = error_norms(_constant(0.3), lambda x, t: np.zeros((1, *x.shape)), mesh, element)
    assert report.m_norm_error == pytest.approx(0.3 * np.sqrt(2.0))
    assert report.one_norm_error == pytest.approx(0.6)
    assert report.inf_norm_error == pytest.approx(0.3)
    assert not report.breakdown


def test_error_norms_flag_breakdown(grid):
    element, mesh = grid
    report = error_norms(_constant(np.nan), lambda x, t: np.zeros((1, *x.shape)), mesh, element)
    assert report.breakdown
    assert report.m_norm_error is None


def test_energy(grid):
    element, mesh = grid
    assert energy(_constant(1.0), mesh, element) == pytest.approx(1.0)
    assert energy(_constant(2.0, components=2), mesh, element) == pytest.approx(8.0)


def test_energy_of_sine(grid):
    element = build_reference_element(8)
    mesh = build_mesh(0.0, 2.0, 10)
    values = jnp.asarray(np.sin(np.pi * mesh.node_coordinates(element)))[None]
    assert energy(SolutionState(values=values, time=0.0), mesh, element) == pytest.approx(0.5, abs=1e-8)


def test_total_mass(grid):
    element, mesh = grid
    values = jnp.stack([jnp.full((5, 5), 1.5), jnp.full((5, 5), -0.5)])
    np.testing.assert_allclose(total_mass(SolutionState(values=values, time=0.0), mesh, element), [3.0, -1.0])


def test_total_variation():
    values = jnp.asarray([[[0.0, 1.0, 0.5], [0.5, 2.0, 2.0]]])
    assert total_variation(SolutionState(values=values, time=0.0)) == pytest.approx(3.0)
