##################################################
# schurlab - Command Line Launcher
# Python version: 3.13.x (project standard)
#
# Usage:
#   python src/schurlab.py compute sp --lambda 1 --nvars 1
#   python src/schurlab.py verify specialization --max-weight 5
#   python src/schurlab.py expand sp --nvars 1 --degree 3
##################################################

import sys

from cli_module.commands import main

if __name__ == "__main__":
    sys.exit(main())
