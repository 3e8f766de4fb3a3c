import numpy as np


NEWTON_TOLERANCE = 1e-14
MAX_NEWTON_ITERATIONS = 100


def legendre_table(x, p):
    """Columns P_0(x), ..., P_p(x) from the three-term recurrence."""
    x = np.asarray(x, dtype=np.float64)
    table = np.zeros(x.shape + (p + 1,))
    table[..., 0] = 1.0
    if p >= 1:
        table[..., 1] = x
    for k in range(2, p + 1):
        table[..., k] = ((2 * k - 1) * x * table[..., k - 1] - (k - 1) * table[..., k - 2]) / k
    return table


def gauss_lobatto(p):
    """Gauss-Lobatto nodes and weights of degree p on [-1, 1], ascending.

    Newton iteration on (1 - x^2) P_p'(x) started from the Chebyshev-Gauss-Lobatto points.
    """
    if p < 1:
        raise ValueError(f"Gauss-Lobatto rule needs degree p >= 1, got {p}")

    nodes = np.cos(np.pi * np.arange(p + 1) / p)
    previous_nodes = np.full_like(nodes, 2.0)
    nr_iterations = 0
    while np.max(np.abs(nodes - previous_nodes)) > NEWTON_TOLERANCE:
        if nr_iterations == MAX_NEWTON_ITERATIONS:
            raise RuntimeError(f"Gauss-Lobatto Newton iteration did not converge for p={p}")
        previous_nodes = nodes
        legendre = legendre_table(previous_nodes, p)
        nodes = previous_nodes - (previous_nodes * legendre[:, p] - legendre[:, p - 1]) / ((p + 1) * legendre[:, p])
        nr_iterations += 1

    nodes = nodes[::-1].copy()

    # Exact symmetry about 0 and exact endpoints
    nodes = 0.5 * (nodes - nodes[::-1])
    nodes[0] = -1.0
    nodes[-1] = 1.0
    if p % 2 == 0:
        nodes[p // 2] = 0.0

    weights = 2.0 / (p * (p + 1) * legendre_table(nodes, p)[:, p] ** 2)
    weights = 0.5 * (weights + weights[::-1])

    return nodes, weights


def barycentric_weights(nodes):
    nodes = np.asarray(nodes, dtype=np.float64)
    differences = nodes[:, None] - nodes[None, :]
    np.fill_diagonal(differences, 1.0)
    if np.any(differences == 0.0):
        raise ValueError("Interpolation nodes must be distinct")
    return 1.0 / np.prod(differences, axis=1)


def differentiation_matrix(nodes):
    """D[k, i] = l_i'(x_k) for the Lagrange basis on the given nodes."""
    nodes = np.asarray(nodes, dtype=np.float64)
    weights = barycentric_weights(nodes)

    differences = nodes[:, None] - nodes[None, :]
    np.fill_diagonal(differences, 1.0)
    diff = (weights[None, :] / weights[:, None]) / differences
    np.fill_diagonal(diff, 0.0)
    # Negative sum trick: rows annihilate constants exactly
    np.fill_diagonal(diff, -np.sum(diff, axis=1))

    return diff
