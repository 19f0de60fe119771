# gkgrowth - growth polynomials of admissible GL_n representations
#
# Usage:
#   python main.py gk problems/bz_example.json
#   python main.py exact problems/steinberg_gl2.json
#   python main.py poset problems/bz_example.json --dot > bz.dot
#   python main.py verify --suite flags --max-n 3 --primes 2,3 --max-N 2
#
# See README.md for the problem file schema and the exit codes.

import os
import sys

# Add the current directory to the Python path
current_dir = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, current_dir)

from cli import main as cli_main  # noqa: E402


def main():
    """Main entry point for gkgrowth"""
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
