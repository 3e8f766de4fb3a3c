def ssprk33_step(state, rhs_fn, dt):
    """Three-stage third-order SSP Runge-Kutta step in Shu-Osher form."""
    u = state.values
    u1 = u + dt * rhs_fn(u)
    u2 = 0.75 * u + 0.25 * (u1 + dt * rhs_fn(u1))
    u_next = u / 3.0 + 2.0 / 3.0 * (u2 + dt * rhs_fn(u2))
    return state.replace(values=u_next, time=state.time + dt)
