from l1_dg.problems.problem_manager import extract_problem_name_from_file, register_problem
from l1_dg.problems.advection.create_problem import create_problem
from l1_dg.problems.advection.default_config import get_config
from l1_dg.problems.advection.general_properties import GeneralProperties


ADVECTION = extract_problem_name_from_file(__file__)
register_problem(ADVECTION, get_config, create_problem, GeneralProperties)
