from l1_dg.problems.problem_manager import extract_problem_name_from_file, register_problem
from l1_dg.problems.burgers.create_problem import create_problem
from l1_dg.problems.burgers.default_config import get_config
from l1_dg.problems.burgers.general_properties import GeneralProperties


BURGERS = extract_problem_name_from_file(__file__)
register_problem(BURGERS, get_config, create_problem, GeneralProperties)
