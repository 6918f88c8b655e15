"""Gray codes for binary words and for the permutations avoiding 132 and 312."""

import sys

from .cli import run


def main() -> int:
    """Get command line arguments and run the requested verb"""
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
