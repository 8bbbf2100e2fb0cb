"""Argument parser built from the command definitions."""

import argparse
from typing import Any

from utils.errors import UsageError

from .definitions import COMMANDS, OPTION_GROUPS


class CommandParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _add_argument(target: Any, spec: dict[str, Any]) -> None:
    options = {key: value for key, value in spec.items() if key != "flags"}
    target.add_argument(*spec["flags"], **options)


def build_parser() -> CommandParser:
    """Parser with one subcommand per entry of COMMANDS."""
    parser = CommandParser(
        prog="imbametric",
        description="Imbalance-robust classification metrics and optimal thresholds",
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True, metavar="COMMAND")

    for command in COMMANDS:
        sub = subparsers.add_parser(command["name"], help=command["help"])
        exclusive = set(command.get("one_of", []))
        group = sub.add_mutually_exclusive_group(required=True) if exclusive else None

        for spec in command["arguments"]:
            _add_argument(group if spec["flags"][0] in exclusive else sub, spec)
        for name in command.get("groups", []):
            section = sub.add_argument_group(f"{name} options")
            for spec in OPTION_GROUPS[name]:
                _add_argument(section, spec)

    return parser
