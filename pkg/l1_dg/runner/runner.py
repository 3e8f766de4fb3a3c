import os

os.environ["XLA_PYTHON_CLIENT_PREALLOCATE"]="false"

# Fix wandb connection issues on slow clusters - https://github.com/wandb/wandb/issues/3911#issuecomment-1409769887
os.environ["WANDB__SERVICE_WAIT"] = "600"

import sys
from absl import flags
from absl import logging as absl_logging
import logging
import logging.handlers
import wandb

from l1_dg.runner.exit_code import ExitCode
from l1_dg.runner.config_parser import ConfigError, parse_config, apply_override, validate_config
from l1_dg.runner.output_writer import write_config_echo, write_run_outputs
from l1_dg.solver.simulation import run_simulation

# Silence jax logging
absl_logging.set_verbosity(absl_logging.ERROR)

l1dg_logger = logging.getLogger("l1_dg")


def setup_logging(quiet=False):
    """Sends the l1_dg logger to stdout. info(msg, flush=False) holds lines back until the next flushing call."""
    console = logging.StreamHandler(sys.stdout)
    console.setFormatter(logging.Formatter("[%(asctime)s] %(levelname)s - %(message)s", "%H:%M:%S"))
    buffer = logging.handlers.MemoryHandler(100, logging.ERROR, console)

    for handler in list(l1dg_logger.handlers):
        l1dg_logger.removeHandler(handler)
        handler.close()
    l1dg_logger.addHandler(buffer)
    l1dg_logger.setLevel(logging.WARNING if quiet else logging.INFO)
    l1dg_logger.propagate = False

    def info(msg, *args, flush=True, **kwargs):
        if l1dg_logger.isEnabledFor(logging.INFO):
            l1dg_logger._log(logging.INFO, msg, args, stacklevel=2, **kwargs)
        if flush:
            buffer.flush()
    l1dg_logger.info = info


def define_flags(flag_values):
    flags.DEFINE_string("config", None, "Path to the JSON run configuration.", flag_values=flag_values)
    flags.DEFINE_string("output_dir", None, "Directory for the CSV outputs, overrides runner.output_dir.", flag_values=flag_values)
    flags.DEFINE_multi_string("override", [], "KEY=VALUE config override, repeatable.", flag_values=flag_values)
    flags.DEFINE_bool("quiet", False, "Only log warnings and errors.", flag_values=flag_values)


def _normalize_argv(argv):
    return [("--output_dir" + arg[len("--output-dir"):]) if arg.startswith("--output-dir") else arg for arg in argv]


class Runner:
    def __init__(self, config):
        self.config = config


    def run(self):
        output_dir = self.config.runner.output_dir
        os.makedirs(output_dir, exist_ok=True)
        write_config_echo(self.config, output_dir)

        if self.config.runner.track_wandb:
            wandb.init(
                entity=self.config.runner.wandb_entity,
                project=self.config.runner.project_name,
                group=self.config.runner.exp_name,
                name=self.config.runner.run_name,
                notes=self.config.runner.notes,
                config=self.config.to_dict(),
            )

        try:
            report = run_simulation(self.config)
        finally:
            if self.config.runner.track_wandb:
                wandb.finish()

        write_run_outputs(report, output_dir, self.config.runner.precision)
        l1dg_logger.info(f"Wrote outputs to {os.path.abspath(output_dir)}")

        if report.breakdown:
            l1dg_logger.warning(f"Run ended with a breakdown at t={report.breakdown_time}")
            return ExitCode.BREAKDOWN
        return ExitCode.SUCCESS


def load_config(path, overrides=(), output_dir=None):
    try:
        with open(path, encoding="utf-8") as file:
            text = file.read()
    except OSError as error:
        raise ConfigError(f"cannot read config file: {error.strerror or error}", path=path) from error

    config = parse_config(text)
    for override in overrides:
        apply_override(config, override)
    if output_dir is not None:
        config.runner.output_dir = output_dir
    return validate_config(config)


def cli_main(argv):
    """Runs one simulation from the command line and returns the process exit code."""
    flag_values = flags.FlagValues()
    define_flags(flag_values)
    try:
        flag_values(_normalize_argv(list(argv)))
    except flags.Error as error:
        print(f"error: {error}", file=sys.stderr)
        return ExitCode.CONFIG_ERROR

    setup_logging(flag_values.quiet)

    if flag_values.config is None:
        print("error: --config is required", file=sys.stderr)
        return ExitCode.CONFIG_ERROR

    try:
        config = load_config(flag_values.config, flag_values.override, flag_values.output_dir)
    except ConfigError as error:
        print(f"error: {flag_values.config}: {error}", file=sys.stderr)
        return ExitCode.CONFIG_ERROR

    try:
        return Runner(config).run()
    except KeyboardInterrupt:
        l1dg_logger.warning("KeyboardInterrupt")
        return ExitCode.INTERNAL_ERROR
    except Exception as error:
        l1dg_logger.error("Run failed", exc_info=True)
        print(f"error: {error}", file=sys.stderr)
        return ExitCode.INTERNAL_ERROR


def main():
    sys.exit(cli_main(sys.argv))
