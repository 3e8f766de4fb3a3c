import numpy as np
import jax.numpy as jnp
import pytest

from l1_dg.element.reference_element import build_reference_element, legendre_projection
from l1_dg.annihilation.pa_matrix import build_pa_matrix, apply_pa, l1_term
from l1_dg.regularization.admm import (
    AdmmParams, AdmmState, AdmmDivergenceError, shrink, initial_state, admm_objective, objective_gradient,
    sparse_objective, minimize_v, admm_iterate, admm_solve,
)

STUDY_PARAMS = AdmmParams(mu=0.005, beta=20.0, alpha=1e-4, tol=1e-3, outer_iters=400)


@pytest.mark.parametrize("x, gamma, expected", [(3.0, 1.0, 2.0), (-0.5, 1.0, 0.0), (0.0, 7.0, 0.0), (-4.0, 1.5, -2.5)])
def test_shrink_examples(x, gamma, expected):
    assert float(shrink(x, gamma)) == expected


def test_shrink_is_proximal_map():
    beta = 20.0
    grid = np.linspace(-3.0, 3.0, 600001)
    for y in np.random.default_rng(0).uniform(-2.0, 2.0, size=25):
        oracle = grid[np.argmin(np.abs(grid) + 0.5 * beta * (grid - y) ** 2)]
        assert float(shrink(y, 1.0 / beta)) == pytest.approx(oracle, abs=1e-5)


def _random_state(rng, p):
    return AdmmState(
        v=jnp.asarray(rng.normal(size=p + 1)),
        g=jnp.asarray(rng.normal(size=p)),
        sigma=jnp.asarray(rng.normal(size=p)),
        delta=jnp.asarray(rng.normal(size=p + 1)),
    )


def test_gradient_matches_finite_differences():
    rng = np.random.default_rng(42)
    step = 1e-6
    for instance in range(100):
        p = int(rng.integers(3, 11))
        pa = build_pa_matrix(build_reference_element(p), 3)
        params = AdmmParams(mu=float(rng.uniform(0.01, 2.0)), beta=float(rng.uniform(1.0, 30.0)))
        state = _random_state(rng, p)
        data = jnp.asarray(rng.normal(size=p + 1))

        gradient = np.asarray(objective_gradient(state, data, pa, params))
        numerical = np.zeros(p + 1)
        for j in range(p + 1):
            shift = jnp.zeros(p + 1).at[j].set(step)
            forward = admm_objective(state.replace(v=state.v + shift), data, pa, params)
            backward = admm_objective(state.replace(v=state.v - shift), data, pa, params)
            numerical[j] = (forward - backward) / (2.0 * step)
        assert np.max(np.abs(gradient - numerical)) <= 1e-6 * max(1.0, np.max(np.abs(gradient)))


def test_gradient_special_cases():
    pa = build_pa_matrix(build_reference_element(5), 3)
    data = jnp.asarray(np.random.default_rng(1).normal(size=6))
    state = initial_state(data, pa)
    np.testing.assert_allclose(objective_gradient(state, data, pa, AdmmParams()), 0.0, atol=1e-12)

    v = data + 1.0
    state = AdmmState(v=v, g=jnp.zeros(5), sigma=jnp.zeros(5), delta=jnp.zeros(6))
    # beta = 0 is outside the valid range but isolates the fidelity term
    params = AdmmParams(mu=0.3, beta=0.0)
    np.testing.assert_allclose(objective_gradient(state, data, pa, params), 0.3 * (v - data), atol=1e-14)


def test_annihilated_data_is_a_fixed_point():
    element = build_reference_element(6)
    pa = build_pa_matrix(element, 3)
    data = 0.5 * element.nodes - 0.2
    np.testing.assert_allclose(admm_solve(data, pa, STUDY_PARAMS), data, atol=1e-3)


def test_fidelity_limit():
    element = build_reference_element(7)
    pa = build_pa_matrix(element, 3)
    data = np.where(element.nodes < 0.1, -1.0, 1.0) + 0.3 * np.sin(5.0 * element.nodes)
    deviations = [
        float(np.max(np.abs(admm_solve(data, pa, AdmmParams(mu=mu)) - data)))
        for mu in (0.01, 0.1, 1.0, 10.0)
    ]
    assert all(later <= earlier + 1e-12 for earlier, later in zip(deviations, deviations[1:]))


def test_sawtooth_reconstruction_is_sparse():
    element = build_reference_element(13)
    pa = build_pa_matrix(element, 3)
    polluted = legendre_projection(lambda x: np.sign(x) - x, element, breakpoints=(0.0,))

    before = np.abs(np.asarray(apply_pa(pa, polluted)))
    sparse = admm_solve(polluted, pa, STUDY_PARAMS)
    after = np.abs(np.asarray(apply_pa(pa, sparse)))

    assert np.count_nonzero(before > 0.1) >= 5
    assert np.count_nonzero(after > 0.1) <= 3
    jump = int(np.argmax(after))
    assert element.nodes[jump] < 0.0 < element.nodes[jump + 1]
    assert float(sparse_objective(sparse, polluted, pa, 0.005)) < float(sparse_objective(polluted, polluted, pa, 0.005))


def test_l1_term_is_shared_with_objective():
    element = build_reference_element(5)
    pa = build_pa_matrix(element, 3)
    v = jnp.asarray(np.random.default_rng(2).normal(size=6))
    assert float(sparse_objective(v, v, pa, 1.0)) == float(l1_term(pa, v))


def test_deterministic():
    element = build_reference_element(8)
    pa = build_pa_matrix(element, 3)
    data = np.where(element.nodes < 0.3, 0.0, 2.0)
    first = np.asarray(admm_solve(data, pa, AdmmParams(mu=0.01)))
    second = np.asarray(admm_solve(data, pa, AdmmParams(mu=0.01)))
    np.testing.assert_array_equal(first, second)


def test_divergence_is_reported():
    element = build_reference_element(8)
    pa = build_pa_matrix(element, 3)
    data = np.where(element.nodes < 0.3, 0.0, 2.0)
    # a descent step far past 2 / mu amplifies v on every inner step
    params = AdmmParams(mu=0.01, beta=20.0, alpha=1e3, v_update="gradient")
    v, diverged_at = admm_iterate(jnp.asarray(data), pa, params)
    assert int(diverged_at) >= 0
    assert not np.all(np.isfinite(np.asarray(v)))
    with pytest.raises(AdmmDivergenceError) as error:
        admm_solve(data, pa, params)
    assert error.value.iteration == int(diverged_at)


def test_non_finite_data_is_reported_as_divergence():
    pa = build_pa_matrix(build_reference_element(6), 3)
    data = np.ones(7)
    data[2] = np.nan
    with pytest.raises(AdmmDivergenceError) as error:
        admm_solve(data, pa, STUDY_PARAMS)
    assert error.value.iteration == 0


def test_gradient_variant_stays_stable_at_small_steps():
    element = build_reference_element(8)
    pa = build_pa_matrix(element, 3)
    data = np.where(element.nodes < 0.3, 0.0, 2.0)
    params = AdmmParams(mu=0.01, alpha=1e-4, v_update="gradient")
    v, diverged_at = admm_iterate(jnp.asarray(data), pa, params)
    assert int(diverged_at) == -1
    assert np.all(np.isfinite(np.asarray(v)))


def test_exact_v_step_minimizes_objective():
    rng = np.random.default_rng(7)
    pa = build_pa_matrix(build_reference_element(9), 3)
    params = AdmmParams(mu=0.05, beta=20.0)
    state = _random_state(rng, 9)
    data = jnp.asarray(rng.normal(size=10))
    state = state.replace(v=minimize_v(state, data, pa, params))
    np.testing.assert_allclose(objective_gradient(state, data, pa, params), 0.0, atol=1e-10)


def test_params_validation():
    AdmmParams().validate()
    with pytest.raises(ValueError):
        AdmmParams(beta=0.0).validate()
    with pytest.raises(ValueError):
        AdmmParams(inner_max=0).validate()
    with pytest.raises(ValueError):
        AdmmParams(outer_iters=0).validate()
    with pytest.raises(ValueError):
        AdmmParams(v_update="newton").validate()
