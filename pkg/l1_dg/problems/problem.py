class Problem:
    def __init__(self, name, get_default_config, create_problem, general_properties):
        self.name = name
        self.get_default_config = get_default_config
        self.create_problem = create_problem
        self.general_properties = general_properties
