from ml_collections import config_dict


def get_config(problem_name):
    config = config_dict.ConfigDict()

    config.name = problem_name

    config.domain = (0.0, 2.0)
    config.t_end = 0.25
    config.p = 6
    config.elements = 100
    config.interface_flux = "entropy-stable"
    config.kappa = 0.9

    return config
