from ml_collections import config_dict


def get_config():
    config = config_dict.ConfigDict()

    config.problem = "burgers"

    # Filled from the selected problem's default config
    config.domain = config_dict.placeholder(tuple)
    config.t_end = config_dict.placeholder(float)
    config.p = config_dict.placeholder(int)
    config.elements = config_dict.placeholder(int)
    config.interface_flux = config_dict.placeholder(str)

    config.cfl = 0.5
    config.mode = "l1"
    config.apply_every = 1

    config.sensor = config_dict.ConfigDict()
    config.sensor.kappa = config_dict.placeholder(float)
    config.sensor.lambda_max = 400.0
    config.sensor.s1_floor = 1e-10
    config.sensor.order_low = 1
    config.sensor.order_high = 3

    config.admm = config_dict.ConfigDict()
    config.admm.pa_order = 3
    config.admm.outer_iters = 400
    config.admm.beta = 20.0
    config.admm.alpha = 1e-4
    config.admm.tol = 1e-3
    config.admm.inner_max = 50
    config.admm.v_update = "exact"

    config.runner = config_dict.ConfigDict()
    config.runner.track_console = False
    config.runner.track_wandb = False
    config.runner.wandb_entity = "placeholder"
    config.runner.project_name = "placeholder"
    config.runner.exp_name = "placeholder"
    config.runner.run_name = "placeholder"
    config.runner.notes = "placeholder"
    config.runner.logging_frequency = 100
    config.runner.sensor_log_frequency = 0  # 0: final step only
    config.runner.output_dir = "runs"
    config.runner.precision = 17

    return config


def fill_problem_defaults(config, problem_config):
    """Resolves the problem-dependent placeholders that are still unset."""
    for key in ["domain", "t_end", "p", "elements", "interface_flux"]:
        if config[key] is None:
            config[key] = problem_config[key]
    if config.sensor.kappa is None:
        config.sensor.kappa = problem_config.kappa
    return config
