import logging
import jax
import jax.numpy as jnp
from flax import struct

from l1_dg.annihilation.pa_matrix import apply_pa, l1_term

l1dg_logger = logging.getLogger("l1_dg")


class VUpdate:
    EXACT = "exact"
    GRADIENT = "gradient"

    ALL = (EXACT, GRADIENT)


class AdmmDivergenceError(RuntimeError):
    def __init__(self, iteration):
        super().__init__(f"ADMM iterates became non-finite in outer iteration {iteration}")
        self.iteration = iteration


@struct.dataclass
class AdmmParams:
    mu: float = 0.005
    beta: float = 20.0
    alpha: float = 1e-4
    tol: float = 1e-3
    outer_iters: int = struct.field(pytree_node=False, default=400)
    inner_max: int = struct.field(pytree_node=False, default=50)
    v_update: str = struct.field(pytree_node=False, default=VUpdate.EXACT)


    def validate(self):
        for name in ["mu", "beta", "alpha", "tol"]:
            if not getattr(self, name) > 0.0:
                raise ValueError(f"ADMM parameter {name} must be positive, got {getattr(self, name)}")
        if self.outer_iters < 1:
            raise ValueError(f"ADMM needs at least one outer iteration, got {self.outer_iters}")
        if self.inner_max < 1:
            raise ValueError(f"ADMM inner_max must be >= 1, got {self.inner_max}")
        if self.v_update not in VUpdate.ALL:
            raise ValueError(f"Unknown ADMM v-update: {self.v_update}")
        return self


@struct.dataclass
class AdmmState:
    v: jax.Array
    g: jax.Array
    sigma: jax.Array
    delta: jax.Array


def shrink(x, gamma):
    # sign(0) = 0, so zero maps to zero
    return jnp.sign(x) * jnp.maximum(jnp.abs(x) - gamma, 0.0)


def initial_state(data, pa):
    return AdmmState(
        v=data,
        g=apply_pa(pa, data),
        sigma=jnp.zeros(pa.degree, dtype=data.dtype),
        delta=jnp.zeros(pa.degree + 1, dtype=data.dtype),
    )


def admm_objective(state, data, pa, params):
    residual = apply_pa(pa, state.v) - state.g
    return (
        jnp.sum(jnp.abs(state.g))
        + 0.5 * params.mu * jnp.sum((state.v - data) ** 2)
        + 0.5 * params.beta * jnp.sum(residual ** 2)
        - jnp.dot(residual, state.sigma)
        - jnp.dot(state.v - data, state.delta)
    )


def objective_gradient(state, data, pa, params):
    residual = apply_pa(pa, state.v) - state.g
    return (
        params.mu * (state.v - data)
        + params.beta * jnp.einsum("kj,k->j", pa.matrix, residual)
        - jnp.einsum("kj,k->j", pa.matrix, state.sigma)
        - state.delta
    )


def sparse_objective(v, data, pa, mu):
    """||L v||_1 + mu/2 ||v - u||^2, the problem the iteration approximates."""
    return l1_term(pa, v) + 0.5 * mu * jnp.sum((v - data) ** 2)


def minimize_v(state, data, pa, params):
    """Exact minimizer of the objective in v for fixed g, sigma and delta.

    Solves (mu I + beta L^T L) v = mu u + L^T (beta g + sigma) + delta.
    """
    matrix = pa.matrix
    system = params.mu * jnp.eye(matrix.shape[1], dtype=matrix.dtype) + params.beta * matrix.T @ matrix
    rhs = params.mu * data + matrix.T @ (params.beta * state.g + state.sigma) + state.delta
    return jnp.linalg.solve(system, rhs)


def _inner_minimization(state, data, pa, params):
    def cond_fn(carry):
        _, nr_iterations, change = carry
        keep_going = (change > params.tol) & (nr_iterations < params.inner_max)
        return (nr_iterations == 0) | (keep_going & jnp.isfinite(change))

    def body_fn(carry):
        state, nr_iterations, _ = carry
        g = shrink(apply_pa(pa, state.v) - state.sigma / params.beta, 1.0 / params.beta)
        state = state.replace(g=g)
        if params.v_update == VUpdate.EXACT:
            v = minimize_v(state, data, pa, params)
            change = jnp.linalg.norm(v - state.v)
        else:
            v = state.v - params.alpha * objective_gradient(state, data, pa, params)
            # stationarity measured by the gradient norm
            change = jnp.linalg.norm(v - state.v) / params.alpha
        return state.replace(v=v), nr_iterations + 1, change

    state, _, _ = jax.lax.while_loop(cond_fn, body_fn, (state, jnp.int32(0), jnp.asarray(jnp.inf, dtype=data.dtype)))
    return state


def admm_iterate(data, pa, params):
    """Runs the outer ADMM loop and returns (v, first non-finite outer iteration or -1)."""
    def cond_fn(carry):
        _, k, diverged_at = carry
        return (k < params.outer_iters) & (diverged_at < 0)

    def body_fn(carry):
        state, k, diverged_at = carry
        state = _inner_minimization(state, data, pa, params)
        state = state.replace(
            sigma=state.sigma - params.beta * (apply_pa(pa, state.v) - state.g),
            delta=state.delta - params.mu * (state.v - data),
        )
        finite = jnp.all(jnp.isfinite(state.v))
        diverged_at = jnp.where(finite, diverged_at, k)
        return state, k + 1, diverged_at

    state, _, diverged_at = jax.lax.while_loop(cond_fn, body_fn, (initial_state(data, pa), jnp.int32(0), jnp.int32(-1)))
    return state.v, diverged_at


_admm_iterate_jit = jax.jit(admm_iterate)


def admm_solve(data, pa, params):
    data = jnp.asarray(data, dtype=jnp.float64)
    v, diverged_at = _admm_iterate_jit(data, pa, params)
    diverged_at = int(diverged_at)
    if diverged_at >= 0:
        l1dg_logger.warning(f"ADMM diverged in outer iteration {diverged_at}")
        raise AdmmDivergenceError(diverged_at)
    return v
