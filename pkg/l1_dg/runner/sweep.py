import logging

from l1_dg.solver.simulation import run_simulation
from l1_dg.runner.config_parser import validate_config
from l1_dg.runner.output_writer import error_row

l1dg_logger = logging.getLogger("l1_dg")


def run_sweep(base_config, degrees, element_counts, modes):
    """Runs every (p, I, mode) combination and returns one error table row per run."""
    rows = []
    for p in degrees:
        for element_count in element_counts:
            for mode in modes:
                config = base_config.copy_and_resolve_references()
                config.p = p
                config.elements = element_count
                config.mode = mode
                validate_config(config)

                report = run_simulation(config)
                rows.append(error_row(report))
                l1dg_logger.info(f"p={p} I={element_count} mode={mode}: {rows[-1][3:]}")
    return rows
