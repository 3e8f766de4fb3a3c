import logging
import time
import numpy as np
import jax
import jax.numpy as jnp
import wandb

from l1_dg.element.reference_element import build_reference_element
from l1_dg.element.mesh import build_mesh
from l1_dg.annihilation.pa_matrix import build_pa_matrix
from l1_dg.sensor.pa_sensor import SensorConfig, sensor_readings
from l1_dg.regularization.admm import AdmmParams
from l1_dg.regularization.element_regularizer import ElementRegularizer
from l1_dg.regularization.regularization_mode import RegularizationMode
from l1_dg.solver.solution_state import SolutionState, is_finite
from l1_dg.solver.ssprk import ssprk33_step
from l1_dg.solver.time_step import compute_dt
from l1_dg.problems.problem_manager import get_problem_create_problem
from l1_dg.problems.norms import ErrorReport, error_norms, energy, total_mass
from l1_dg.runner.run_report import RunReport, DiagnosticsRow, SensorLogRow

l1dg_logger = logging.getLogger("l1_dg")


class Simulation:
    def __init__(self, config):
        self.config = config
        self.track_console = config.runner.track_console
        self.track_wandb = config.runner.track_wandb
        self.logging_frequency = config.runner.logging_frequency
        self.sensor_log_frequency = config.runner.sensor_log_frequency
        self.t_end = config.t_end
        self.cfl = config.cfl
        self.mode = config.mode
        self.apply_every = config.apply_every

        if self.mode not in RegularizationMode.ALL:
            raise ValueError(f"Unknown regularization mode: {self.mode}")
        if self.apply_every < 1:
            raise ValueError(f"apply_every must be >= 1, got {self.apply_every}")

        self.problem = get_problem_create_problem(config.problem)(config)
        self.element = build_reference_element(config.p)
        self.mesh = build_mesh(config.domain[0], config.domain[1], config.elements)

        self.sensor_config = SensorConfig(
            kappa=config.sensor.kappa,
            lambda_max=config.sensor.lambda_max,
            s1_floor=config.sensor.s1_floor,
            order_low=config.sensor.order_low,
            order_high=config.sensor.order_high,
        ).validate()
        self.admm_params = AdmmParams(
            beta=config.admm.beta,
            alpha=config.admm.alpha,
            tol=config.admm.tol,
            outer_iters=config.admm.outer_iters,
            inner_max=config.admm.inner_max,
            v_update=config.admm.v_update,
        ).validate()

        # The sensor needs p >= order_high; without regularization low degrees run undiagnosed
        self.sensor_enabled = config.p >= self.sensor_config.order_high
        if not self.sensor_enabled and self.mode != RegularizationMode.NONE:
            raise ValueError(f"Regularization needs p >= {self.sensor_config.order_high}, got p={config.p}")

        self.regularizer = None
        self._read_sensor = None
        if self.sensor_enabled:
            pa_low = build_pa_matrix(self.element, self.sensor_config.order_low)
            pa_high = build_pa_matrix(self.element, self.sensor_config.order_high)
            sensor_config = self.sensor_config
            self._read_sensor = jax.jit(lambda values: sensor_readings(values, pa_low, pa_high, sensor_config))
            if self.mode != RegularizationMode.NONE:
                pa_regularization = build_pa_matrix(self.element, config.admm.pa_order)
                self.regularizer = ElementRegularizer(
                    self.element, self.mode, self.sensor_config, self.admm_params, pa_low, pa_high, pa_regularization)

        element, mesh, problem = self.element, self.mesh, self.problem
        rhs_fn = lambda values: problem.rhs(values, element, mesh, problem)
        self._advance = jax.jit(lambda state, dt: ssprk33_step(state, rhs_fn, dt))


    def initial_state(self):
        x = self.mesh.node_coordinates(self.element)
        values = jnp.asarray(self.problem.initial(x), dtype=jnp.float64).reshape(self.problem.component_count, *x.shape)
        return SolutionState(values=values, time=0.0)


    def run(self):
        l1dg_logger.info(f"Running {self.problem.name} with p={self.config.p}, I={self.config.elements}, mode={self.mode} until t={self.t_end}")
        start_time = time.time()

        state = self.initial_state()
        step = 0
        breakdown = False
        breakdown_time = None
        readings = self._sensor(state.values)
        readings_step = 0
        diagnostics = [self._diagnostics_row(state, step, 0.0, readings)]
        sensor_log = []

        while state.time < self.t_end:
            dt = compute_dt(state, self.mesh, self.element, self.cfl, self.problem.max_speed, self.t_end)
            last_step = dt >= self.t_end - state.time
            next_time = self.t_end if last_step else state.time + dt

            values = self._advance(state, dt).values
            step += 1

            if self.regularizer is not None and step % self.apply_every == 0:
                values, readings, nr_diverged = self.regularizer(values)
                nr_diverged = int(nr_diverged)
                if nr_diverged > 0:
                    l1dg_logger.warning(f"ADMM diverged in {nr_diverged} element(s) at step {step}")
            else:
                readings = self._sensor(values)
            readings_step = step

            next_state = SolutionState(values=values, time=next_time)
            if not is_finite(next_state):
                breakdown = True
                breakdown_time = next_time
                l1dg_logger.warning(f"Numerical solution broke down at t={next_time} (step {step})")
                break
            state = next_state

            row = self._diagnostics_row(state, step, dt, readings)
            diagnostics.append(row)
            if self.sensor_log_frequency > 0 and step % self.sensor_log_frequency == 0 and not last_step:
                sensor_log.extend(self._sensor_rows(step, readings))
            if self.logging_frequency > 0 and step % self.logging_frequency == 0:
                self.log_step(row)

        if readings is not None:
            sensor_log.extend(self._sensor_rows(readings_step, readings))

        error_report = None
        if self.problem.has_reference:
            error_report = ErrorReport(breakdown=True) if breakdown else error_norms(state, self.problem.reference, self.mesh, self.element)

        l1dg_logger.info(f"Finished after {step} steps in {time.time() - start_time:.2f}s" + (" with breakdown" if breakdown else ""))

        return RunReport(
            config=self.config,
            final_state=state,
            mesh=self.mesh,
            element=self.element,
            problem=self.problem,
            error_report=error_report,
            breakdown=breakdown,
            breakdown_time=breakdown_time,
            diagnostics=diagnostics,
            sensor_log=sensor_log,
            final_readings=readings,
            nr_steps=step,
        )


    def _sensor(self, values):
        if self._read_sensor is None:
            return None
        return self._read_sensor(values)


    def _diagnostics_row(self, state, step, dt, readings):
        troubled_count = 0 if readings is None else int(np.sum(np.asarray(readings.lam) > 0.0))
        return DiagnosticsRow(
            step=step,
            time=float(state.time),
            dt=float(dt),
            mass=tuple(float(m) for m in total_mass(state, self.mesh, self.element)),
            energy=energy(state, self.mesh, self.element),
            troubled_count=troubled_count,
        )


    def _sensor_rows(self, step, readings):
        s1, s3, ratio, lam = (np.asarray(field) for field in (readings.s1, readings.s3, readings.ratio, readings.lam))
        rows = []
        for element_index in range(s1.shape[1]):
            for variable in range(s1.shape[0]):
                rows.append(SensorLogRow(
                    step=step, element=element_index, variable=variable,
                    s1=float(s1[variable, element_index]), s3=float(s3[variable, element_index]),
                    ratio=float(ratio[variable, element_index]), lam=float(lam[variable, element_index]),
                ))
        return rows


    def log_step(self, row):
        metrics = {
            "time/t": row.time,
            "time/dt": row.dt,
            "diagnostics/energy": row.energy,
            "diagnostics/troubled_count": row.troubled_count,
        }
        for component, mass in enumerate(row.mass):
            metrics[f"diagnostics/mass_{component}"] = mass

        if self.track_wandb:
            wandb.log(metrics, step=row.step)
        if self.track_console:
            self.start_logging(row.step)
            for key, value in metrics.items():
                self.log_console(key, value)
            self.end_logging()


    def log_console(self, name, value):
        value = np.format_float_positional(value, trim="-")
        l1dg_logger.info(f"│ {name.ljust(30)}│ {str(value).ljust(14)[:14]} │", flush=False)


    def start_logging(self, step):
        l1dg_logger.info("┌" + "─" * 31 + "┬" + "─" * 16 + "┐", flush=False)
        self.log_console("steps/nr_steps", step)


    def end_logging(self):
        l1dg_logger.info("└" + "─" * 31 + "┴" + "─" * 16 + "┘")


def run_simulation(config):
    return Simulation(config).run()
