from ml_collections import config_dict


def get_config(problem_name):
    config = config_dict.ConfigDict()

    config.name = problem_name

    config.domain = (0.0, 2.0)
    config.t_end = 2.0
    config.p = 4
    config.elements = 16
    config.interface_flux = "local-lax-friedrichs"
    config.kappa = 0.8

    return config
