import os
import numpy as np
from absl import app
from absl import flags

from l1_dg.element.reference_element import build_reference_element, legendre_projection
from l1_dg.annihilation.pa_matrix import build_pa_matrix, apply_pa
from l1_dg.regularization.admm import AdmmParams, admm_solve
from l1_dg.runner.runner import setup_logging
from l1_dg.runner.output_writer import write_csv

FLAGS = flags.FLAGS
flags.DEFINE_integer("p", 13, "Polynomial degree.")
flags.DEFINE_integer("pa_order", 3, "Order of the annihilation operator in the objective.")
flags.DEFINE_float("beta", 20.0, "Augmentation parameter.")
flags.DEFINE_string("output_dir", "runs/sawtooth_demo", "Directory for the CSV outputs.")


def sawtooth(x):
    return np.sign(x) - x


def main(_):
    setup_logging()
    element = build_reference_element(FLAGS.p)
    pa = build_pa_matrix(element, FLAGS.pa_order)
    params = AdmmParams(mu=0.005, beta=FLAGS.beta, alpha=1e-4, tol=1e-3, outer_iters=400).validate()

    polluted = legendre_projection(sawtooth, element, breakpoints=(0.0,))
    sparse = np.asarray(admm_solve(polluted, pa, params))

    os.makedirs(FLAGS.output_dir, exist_ok=True)
    write_csv(os.path.join(FLAGS.output_dir, "nodal.csv"), ["x", "exact", "polluted", "sparse"],
              zip(element.nodes, sawtooth(element.nodes), polluted, sparse))
    write_csv(os.path.join(FLAGS.output_dir, "jumps.csv"), ["midpoint", "polluted", "sparse"],
              zip(pa.midpoints, np.asarray(apply_pa(pa, polluted)), np.asarray(apply_pa(pa, sparse))))


if __name__ == "__main__":
    app.run(main)
