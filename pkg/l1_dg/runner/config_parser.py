import re
import json
import difflib
from ml_collections import config_dict

import l1_dg.problems
from l1_dg.problems.problem_manager import get_problem_names, get_problem_config, get_problem_general_properties
from l1_dg.regularization.regularization_mode import RegularizationMode
from l1_dg.regularization.admm import VUpdate
from l1_dg.solver.interface_flux_type import InterfaceFluxType
from l1_dg.runner.default_config import get_config, fill_problem_defaults


class ConfigError(ValueError):
    """Invalid configuration, located by dotted field path and source line when known."""
    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        location = ""
        if line is not None:
            location += f"line {line}: "
        if path is not None:
            location += f"{path}: "
        super().__init__(location + message)


def _closed_enums():
    return {
        "problem": get_problem_names(),
        "mode": RegularizationMode.ALL,
        "interface_flux": InterfaceFluxType.ALL,
        "admm.v_update": VUpdate.ALL,
    }


def _line_of(text, path):
    if text is None or path is None:
        return None
    key = path.split(".")[-1]
    match = re.search(rf'"{re.escape(key)}"\s*:', text)
    if match is None:
        return None
    return text.count("\n", 0, match.start()) + 1


def _suggestion(value, choices):
    close = difflib.get_close_matches(str(value), [str(choice) for choice in choices], n=1, cutoff=0.5)
    return f", did you mean \"{close[0]}\"?" if close else ""


def _coerce(value, expected_type, path, line):
    if expected_type is bool:
        if isinstance(value, bool):
            return value
    elif expected_type is int:
        if isinstance(value, int) and not isinstance(value, bool):
            return value
    elif expected_type is float:
        if isinstance(value, (int, float)) and not isinstance(value, bool):
            return float(value)
    elif expected_type is str:
        if isinstance(value, str):
            return value
    elif expected_type is tuple:
        if isinstance(value, (list, tuple)) and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value):
            return tuple(float(v) for v in value)
    raise ConfigError(f"expected {expected_type.__name__}, got {json.dumps(value)}", path, line)


def _assign(config, path, value, text=None):
    line = _line_of(text, path)
    node = config
    keys = path.split(".")
    for depth, key in enumerate(keys):
        if key not in node:
            raise ConfigError(f"unknown key \"{key}\"" + _suggestion(key, node.keys()), ".".join(keys[:depth + 1]), line)
        if depth < len(keys) - 1:
            node = node[key]
            if not isinstance(node, config_dict.ConfigDict):
                raise ConfigError(f"\"{key}\" has no fields", ".".join(keys[:depth + 1]), line)

    leaf = keys[-1]
    if isinstance(node[leaf], config_dict.ConfigDict):
        if not isinstance(value, dict):
            raise ConfigError(f"expected an object, got {json.dumps(value)}", path, line)
        for key, sub_value in value.items():
            _assign(config, f"{path}.{key}", sub_value, text)
        return

    enums = _closed_enums()
    if path in enums and value not in enums[path]:
        raise ConfigError(f"unknown value \"{value}\", expected one of {list(enums[path])}" + _suggestion(value, enums[path]), path, line)

    node[leaf] = _coerce(value, node.get_type(leaf), path, line)


def _require(condition, message, path, text):
    if not condition:
        raise ConfigError(message, path, _line_of(text, path))


def validate_config(config, text=None):
    _require(config.p >= 1, f"must be >= 1, got {config.p}", "p", text)
    _require(config.elements >= 1, f"must be >= 1, got {config.elements}", "elements", text)
    _require(len(config.domain) == 2 and config.domain[0] < config.domain[1], f"must be [a, b] with a < b, got {list(config.domain)}", "domain", text)
    _require(config.t_end >= 0.0, f"must be >= 0, got {config.t_end}", "t_end", text)
    _require(config.cfl > 0.0, f"must be positive, got {config.cfl}", "cfl", text)
    _require(config.apply_every >= 1, f"must be >= 1, got {config.apply_every}", "apply_every", text)

    _require(0.0 <= config.sensor.kappa < 1.0, f"must lie in [0, 1), got {config.sensor.kappa}", "sensor.kappa", text)
    for name in ["lambda_max", "s1_floor"]:
        _require(config.sensor[name] > 0.0, f"must be positive, got {config.sensor[name]}", f"sensor.{name}", text)
    _require(config.sensor.order_low >= 1, f"must be >= 1, got {config.sensor.order_low}", "sensor.order_low", text)
    _require(config.sensor.order_high > config.sensor.order_low, f"must exceed sensor.order_low, got {config.sensor.order_high}", "sensor.order_high", text)

    for name in ["beta", "alpha", "tol"]:
        _require(config.admm[name] > 0.0, f"must be positive, got {config.admm[name]}", f"admm.{name}", text)
    for name in ["outer_iters", "inner_max", "pa_order"]:
        _require(config.admm[name] >= 1, f"must be >= 1, got {config.admm[name]}", f"admm.{name}", text)

    if config.mode != RegularizationMode.NONE:
        _require(config.p >= config.sensor.order_high, f"regularization needs p >= sensor.order_high={config.sensor.order_high}, got {config.p}", "p", text)
        _require(config.admm.pa_order <= config.p, f"must not exceed p={config.p}, got {config.admm.pa_order}", "admm.pa_order", text)

    general_properties = get_problem_general_properties(config.problem)
    _require(config.interface_flux in general_properties.interface_flux_types,
             f"problem {config.problem} supports {general_properties.interface_flux_types}, got \"{config.interface_flux}\"", "interface_flux", text)
    if general_properties.max_t_end is not None:
        _require(config.t_end <= general_properties.max_t_end,
                 f"problem {config.problem} has a reference solution up to t={general_properties.max_t_end}, got {config.t_end}", "t_end", text)

    _require(1 <= config.runner.precision <= 17, f"must lie in [1, 17], got {config.runner.precision}", "runner.precision", text)
    _require(config.runner.logging_frequency >= 0, f"must be >= 0, got {config.runner.logging_frequency}", "runner.logging_frequency", text)
    _require(config.runner.sensor_log_frequency >= 0, f"must be >= 0, got {config.runner.sensor_log_frequency}", "runner.sensor_log_frequency", text)
    return config


def parse_config(text):
    """Parses a JSON run configuration, fills defaults and validates it."""
    try:
        document = json.loads(text)
    except json.JSONDecodeError as error:
        raise ConfigError(error.msg, line=error.lineno) from error
    if not isinstance(document, dict):
        raise ConfigError("the configuration must be a JSON object", line=1)

    config = get_config()
    if "problem" in document:
        _assign(config, "problem", document["problem"], text)
    for key, value in document.items():
        _assign(config, key, value, text)

    fill_problem_defaults(config, get_problem_config(config.problem))
    return validate_config(config, text)


def decode_override_value(raw):
    try:
        return json.loads(raw)
    except json.JSONDecodeError:
        return raw


def apply_override(config, override):
    """Applies "a.b=value" to a parsed config; the value is read as a JSON literal or a bare string."""
    if "=" not in override:
        raise ConfigError(f"override \"{override}\" is not of the form KEY=VALUE")
    path, raw = override.split("=", 1)
    path = path.strip()
    if path == "problem":
        raise ConfigError("the problem cannot be overridden, set it in the config file", path)
    _assign(config, path, decode_override_value(raw))
    return validate_config(config)
