import os
import csv
import json
import numpy as np

SOLUTION_FILE = "solution.csv"
ERRORS_FILE = "errors.csv"
DIAGNOSTICS_FILE = "diagnostics.csv"
SENSOR_FILE = "sensor.csv"
CONFIG_FILE = "config.json"


def format_value(value, precision=17):
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.{precision}g}"
    return str(value)


def _write(path, write_fn):
    try:
        with open(path, "w", newline="", encoding="utf-8") as file:
            write_fn(file)
    except OSError as error:
        raise OSError(f"Could not write {path}: {error.strerror or error}") from error
    return path


def write_csv(path, header, rows, precision=17):
    def write_fn(file):
        writer = csv.writer(file, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_value(value, precision) for value in row])
    return _write(path, write_fn)


def write_solution_csv(report, output_dir, precision=17):
    """One row per global node, elements in order: x, u0[, u1][, reference]."""
    state = report.final_state
    x = report.mesh.node_coordinates(report.element)
    values = np.asarray(state.values)

    header = ["x"] + [f"u{component}" for component in range(values.shape[0])]
    columns = [x.reshape(-1)] + [values[component].reshape(-1) for component in range(values.shape[0])]
    if report.problem.has_reference:
        header.append("reference")
        columns.append(np.asarray(report.problem.reference(x, float(state.time)))[0].reshape(-1))

    return write_csv(os.path.join(output_dir, SOLUTION_FILE), header, zip(*columns), precision)


def error_row(report):
    """(p, I, mode, m_norm, one_norm, inf_norm, breakdown) of one run."""
    errors = report.error_report
    norms = (None, None, None) if errors is None or errors.breakdown else (errors.m_norm_error, errors.one_norm_error, errors.inf_norm_error)
    return (report.config.p, report.config.elements, report.config.mode, *norms, report.breakdown)


def write_error_table(rows, output_dir, precision=17):
    header = ["p", "I", "mode", "m_norm", "one_norm", "inf_norm", "breakdown"]
    return write_csv(os.path.join(output_dir, ERRORS_FILE), header, rows, precision)


def write_diagnostics(report, output_dir, precision=17):
    nr_components = report.final_state.components
    header = ["step", "time", "dt"] + [f"mass_{component}" for component in range(nr_components)] + ["energy", "troubled_count"]
    rows = [(row.step, row.time, row.dt, *row.mass, row.energy, row.troubled_count) for row in report.diagnostics]
    return write_csv(os.path.join(output_dir, DIAGNOSTICS_FILE), header, rows, precision)


def write_sensor_log(report, output_dir, precision=17):
    header = ["step", "element", "variable", "s1", "s3", "ratio", "lambda"]
    rows = [(row.step, row.element, row.variable, row.s1, row.s3, row.ratio, row.lam) for row in report.sensor_log]
    return write_csv(os.path.join(output_dir, SENSOR_FILE), header, rows, precision)


def write_config_echo(config, output_dir):
    def write_fn(file):
        file.write(json.dumps(config.to_dict(), indent=2, sort_keys=True) + "\n")
    return _write(os.path.join(output_dir, CONFIG_FILE), write_fn)


def write_run_outputs(report, output_dir, precision=17):
    os.makedirs(output_dir, exist_ok=True)
    return [
        write_solution_csv(report, output_dir, precision),
        write_error_table([error_row(report)], output_dir, precision),
        write_diagnostics(report, output_dir, precision),
        write_sensor_log(report, output_dir, precision),
    ]
