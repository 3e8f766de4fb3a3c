from os import sep as slash
from l1_dg.problems.problem import Problem


_problems = {}


def extract_problem_name_from_file(file_name):
    return file_name.split(f"problems{slash}")[1].split(f"{slash}__init__.py")[0].replace(slash, ".").replace("_", "-")


def register_problem(name, get_default_config, create_problem, general_properties):
    _problems[name] = Problem(name, get_default_config, create_problem, general_properties)


def get_problem_names():
    return tuple(_problems.keys())


def get_problem_config(problem_name):
    return _problems[problem_name].get_default_config(problem_name)


def get_problem_create_problem(problem_name):
    return _problems[problem_name].create_problem


def get_problem_general_properties(problem_name):
    return _problems[problem_name].general_properties
