from flax import struct


@struct.dataclass
class DiagnosticsRow:
    step: int
    time: float
    dt: float
    mass: tuple
    energy: float
    troubled_count: int


@struct.dataclass
class SensorLogRow:
    step: int
    element: int
    variable: int
    s1: float
    s3: float
    ratio: float
    lam: float


class RunReport:
    """Outcome of one simulation: final state, errors, breakdown stamp and the per-step logs."""
    def __init__(self, config, final_state, mesh, element, problem, error_report, breakdown, breakdown_time,
                 diagnostics, sensor_log, final_readings, nr_steps):
        self.config = config
        self.final_state = final_state
        self.mesh = mesh
        self.element = element
        self.problem = problem
        self.error_report = error_report
        self.breakdown = breakdown
        self.breakdown_time = breakdown_time
        self.diagnostics = diagnostics
        self.sensor_log = sensor_log
        self.final_readings = final_readings
        self.nr_steps = nr_steps
