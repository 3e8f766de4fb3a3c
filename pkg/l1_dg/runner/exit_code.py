class ExitCode:
    SUCCESS = 0
    INTERNAL_ERROR = 1
    CONFIG_ERROR = 2
    BREAKDOWN = 3
