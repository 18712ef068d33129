import sys

from wedge_orthopoly.cli import main

if __name__ == "__main__":
    sys.exit(main())
