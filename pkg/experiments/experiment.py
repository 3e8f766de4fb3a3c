import sys

from l1_dg.runner.runner import cli_main


if __name__ == "__main__":
    sys.exit(cli_main(sys.argv))
