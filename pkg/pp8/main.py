"""
Entry point of the pp8 command line.

Run as ``python -m pp8.main <subcommand> ...``.
"""

import sys

from pp8.cli.commands import main

if __name__ == "__main__":
    sys.exit(main())
