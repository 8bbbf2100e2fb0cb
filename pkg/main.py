#!/usr/bin/env python3
"""imbametric CLI - metrics, optimal thresholds, curves and simulations for imbalanced classification."""

import sys

from commands import CommandConfig, build_parser, run
from utils import initialize, show_error
from utils.errors import UsageError


def main(argv: list[str] | None = None) -> int:
    """Main entry point for the CLI."""
    try:
        args = build_parser().parse_args(argv)
        cfg = CommandConfig.from_namespace(args)
    except UsageError as e:
        show_error(e.kind, str(e))
        return e.exit_code

    initialize(verbose=args.verbose)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
