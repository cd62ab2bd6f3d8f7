"""csfkit - command-line entry point."""

import sys

from csfkit.cli.app import run


if __name__ == "__main__":
    sys.exit(run())
