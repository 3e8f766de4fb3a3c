import json
import logging
import pytest

from l1_dg.runner.exit_code import ExitCode
from l1_dg.runner.runner import cli_main, setup_logging
from l1_dg.runner.output_writer import SOLUTION_FILE, ERRORS_FILE, DIAGNOSTICS_FILE, SENSOR_FILE, CONFIG_FILE


def _write_config(tmp_path, **document):
    path = tmp_path / "run.json"
    path.write_text(json.dumps(document, indent=2))
    return str(path)


@pytest.fixture
def small_run(tmp_path):
    return _write_config(tmp_path, problem="advection", p=4, elements=4, t_end=0.02)


def test_successful_run_writes_all_outputs(small_run, tmp_path):
    output_dir = tmp_path / "out"
    exit_code = cli_main(["l1-dg", "--config", small_run, "--output-dir", str(output_dir), "--quiet"])
    assert exit_code == ExitCode.SUCCESS
    for name in [SOLUTION_FILE, ERRORS_FILE, DIAGNOSTICS_FILE, SENSOR_FILE, CONFIG_FILE]:
        assert (output_dir / name).is_file()


def test_missing_config_flag():
    assert cli_main(["l1-dg", "--quiet"]) == ExitCode.CONFIG_ERROR


def test_unreadable_config(tmp_path, capsys):
    assert cli_main(["l1-dg", "--config", str(tmp_path / "absent.json"), "--quiet"]) == ExitCode.CONFIG_ERROR
    assert "cannot read config file" in capsys.readouterr().err


def test_invalid_config(tmp_path, capsys):
    path = _write_config(tmp_path, problem="burgers", mode="l1mc")
    assert cli_main(["l1-dg", "--config", path, "--quiet"]) == ExitCode.CONFIG_ERROR
    assert "l1-mc" in capsys.readouterr().err


def test_invalid_override(small_run, tmp_path):
    args = ["l1-dg", "--config", small_run, "--override", "p=0", "--output-dir", str(tmp_path / "out"), "--quiet"]
    assert cli_main(args) == ExitCode.CONFIG_ERROR
    assert not (tmp_path / "out").exists()


def test_unknown_flag(small_run):
    assert cli_main(["l1-dg", "--config", small_run, "--verbose"]) == ExitCode.CONFIG_ERROR


def test_overrides_are_echoed(small_run, tmp_path):
    output_dir = tmp_path / "out"
    args = ["l1-dg", "--config", small_run, "--output-dir", str(output_dir),
            "--override", "admm.beta=10", "--override", "mode=l1-mc", "--quiet"]
    assert cli_main(args) == ExitCode.SUCCESS
    echo = json.loads((output_dir / CONFIG_FILE).read_text())
    assert echo["admm"]["beta"] == 10.0
    assert echo["mode"] == "l1-mc"
    assert echo["runner"]["output_dir"] == str(output_dir)


def test_runs_are_deterministic(small_run, tmp_path):
    outputs = []
    for name in ["first", "second"]:
        output_dir = tmp_path / name
        assert cli_main(["l1-dg", "--config", small_run, "--output-dir", str(output_dir), "--quiet"]) == ExitCode.SUCCESS
        outputs.append({file: (output_dir / file).read_bytes() for file in [SOLUTION_FILE, ERRORS_FILE, DIAGNOSTICS_FILE, SENSOR_FILE]})
    assert outputs[0] == outputs[1]


def test_logging_setup_is_idempotent_and_buffers_unflushed_lines(capsys):
    logger = logging.getLogger("l1_dg")
    setup_logging()
    setup_logging()
    assert len(logger.handlers) == 1
    assert logger.level == logging.INFO

    logger.info("held back", flush=False)
    assert "held back" not in capsys.readouterr().out
    logger.info("released")
    out = capsys.readouterr().out
    assert out.index("held back") < out.index("released")

    setup_logging(quiet=True)
    logger.info("hidden")
    logger.warning("shown")
    logger.handlers[0].flush()
    out = capsys.readouterr().out
    assert "hidden" not in out and "shown" in out
