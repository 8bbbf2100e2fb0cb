from metrics import format_metric_spec, parse_metric_spec

from .config import CommandConfig
from .definitions import COMMANDS, OPTION_GROUPS
from .parser import build_parser
from .router import COMMAND_HANDLERS, run

__all__ = [
    "format_metric_spec",
    "parse_metric_spec",
    "CommandConfig",
    "COMMANDS",
    "OPTION_GROUPS",
    "build_parser",
    "COMMAND_HANDLERS",
    "run",
]
