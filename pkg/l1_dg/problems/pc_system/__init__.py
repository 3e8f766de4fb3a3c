from l1_dg.problems.problem_manager import extract_problem_name_from_file, register_problem
from l1_dg.problems.pc_system.create_problem import create_problem
from l1_dg.problems.pc_system.default_config import get_config
from l1_dg.problems.pc_system.general_properties import GeneralProperties


PC_SYSTEM = extract_problem_name_from_file(__file__)
register_problem(PC_SYSTEM, get_config, create_problem, GeneralProperties)
