import os
from absl import app
from absl import flags

from l1_dg.regularization.regularization_mode import RegularizationMode
from l1_dg.runner.runner import setup_logging, load_config
from l1_dg.runner.sweep import run_sweep
from l1_dg.runner.output_writer import write_error_table

FLAGS = flags.FLAGS
flags.DEFINE_string("config", "configs/burgers.json", "Base run configuration.")
flags.DEFINE_list("degrees", ["4", "5"], "Polynomial degrees.")
flags.DEFINE_list("element_counts", ["15", "31", "63", "127"], "Element counts.")
flags.DEFINE_list("modes", list(RegularizationMode.ALL), "Regularization modes.")
flags.DEFINE_string("output_dir", "runs/table_sweep", "Directory for errors.csv.")


def main(_):
    setup_logging()
    config = load_config(FLAGS.config)
    rows = run_sweep(config, [int(p) for p in FLAGS.degrees], [int(i) for i in FLAGS.element_counts], FLAGS.modes)
    os.makedirs(FLAGS.output_dir, exist_ok=True)
    write_error_table(rows, FLAGS.output_dir, config.runner.precision)


if __name__ == "__main__":
    app.run(main)
