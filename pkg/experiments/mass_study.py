import os
import logging
import numpy as np
from absl import app
from absl import flags

from l1_dg.element.reference_element import build_reference_element
from l1_dg.annihilation.pa_matrix import build_pa_matrix
from l1_dg.regularization.admm import AdmmParams, admm_solve
from l1_dg.regularization.mass_correction import mass_correct, element_mass
from l1_dg.runner.runner import setup_logging
from l1_dg.runner.output_writer import write_csv

FLAGS = flags.FLAGS
flags.DEFINE_integer("min_degree", 4, "Smallest polynomial degree.")
flags.DEFINE_integer("max_degree", 20, "Largest polynomial degree.")
flags.DEFINE_string("output_dir", "runs/mass_study", "Directory for mass_study.csv.")

l1dg_logger = logging.getLogger("l1_dg")


def shifted_step(x):
    return np.sign(x - 0.5) + 1.0


def main(_):
    setup_logging()
    params = AdmmParams(mu=0.005).validate()

    rows = []
    for p in range(FLAGS.min_degree, FLAGS.max_degree + 1):
        element = build_reference_element(p)
        data = shifted_step(element.nodes)
        sparse = admm_solve(data, build_pa_matrix(element, 3), params)
        corrected = mass_correct(data, sparse, element)

        mass = float(element_mass(data, element))
        uncorrected_error = abs(float(element_mass(sparse, element)) - mass)
        corrected_error = abs(float(element_mass(corrected, element)) - mass)
        rows.append((p, mass, uncorrected_error, corrected_error))
        l1dg_logger.info(f"p={p}: mass error {uncorrected_error:.3e} without, {corrected_error:.3e} with correction")

    os.makedirs(FLAGS.output_dir, exist_ok=True)
    write_csv(os.path.join(FLAGS.output_dir, "mass_study.csv"), ["p", "mass", "uncorrected_error", "corrected_error"], rows)


if __name__ == "__main__":
    app.run(main)
