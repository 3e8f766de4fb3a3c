import os
import numpy as np
from absl import app
from absl import flags

from l1_dg.element.reference_element import build_reference_element
from l1_dg.annihilation.pa_matrix import build_pa_matrix, apply_pa
from l1_dg.runner.output_writer import write_csv

FLAGS = flags.FLAGS
flags.DEFINE_integer("p", 7, "Polynomial degree, p + 1 Gauss-Lobatto points.")
flags.DEFINE_string("output_dir", "runs/pa_demo", "Directory for pa_demo.csv.")

TEST_FUNCTIONS = {
    "step": lambda x: np.where(x < 0.1, 0.0, 1.0),
    "kink": lambda x: np.abs(x - 0.1),
    "smooth": lambda x: np.sin(np.pi * x),
}


def main(_):
    element = build_reference_element(FLAGS.p)
    operators = [build_pa_matrix(element, order) for order in (1, 3)]

    rows = []
    for name, fn in TEST_FUNCTIONS.items():
        values = fn(element.nodes)
        transforms = [np.asarray(apply_pa(pa, values)) for pa in operators]
        for k, midpoint in enumerate(operators[0].midpoints):
            rows.append((name, k, midpoint, transforms[0][k], transforms[1][k]))

    os.makedirs(FLAGS.output_dir, exist_ok=True)
    write_csv(os.path.join(FLAGS.output_dir, "pa_demo.csv"), ["function", "k", "midpoint", "order_1", "order_3"], rows)


if __name__ == "__main__":
    app.run(main)
