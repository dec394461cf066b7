import sys

from zeta_discrete_moments.cli import main

if __name__ == "__main__":
    sys.exit(main())
