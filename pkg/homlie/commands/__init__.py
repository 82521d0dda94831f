import argparse
import logging
import sys
from typing import Dict, List, Optional, Sequence, TextIO, Tuple

from ..config import HomLieConfig, resolve_config
from ..errors import HomLieError, ValidationError
from ..utils import io_utils, report_utils

# Import command modules
from . import help as help_cmd
from . import validate as validate_cmd
from . import info as info_cmd
from . import solve as solve_cmd
from . import reduce as reduce_cmd
from . import verify as verify_cmd
from . import catalog as catalog_cmd
from . import loop_check as loop_check_cmd

logger = logging.getLogger(__name__)

PROG = "homlie"
COMMAND_MODULES = (help_cmd, validate_cmd, info_cmd, solve_cmd, reduce_cmd, verify_cmd, catalog_cmd, loop_check_cmd)


def preparse(argv: Sequence[str]) -> argparse.Namespace:
    """Reads the global --config and --log-level options ahead of the full parser."""
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    pre.add_argument("--log-level")
    return pre.parse_known_args(list(argv))[0]


def _global_options(parser: argparse.ArgumentParser):
    parser.add_argument("--config", metavar="PATH", help="config file (.json, .yaml, .yml, .toml)")
    parser.add_argument("--log-level", metavar="LEVEL", help="DEBUG, INFO, WARNING, ERROR or CRITICAL")


def register_all(subparsers, config: HomLieConfig, prog: str = PROG) -> Dict[str, Dict[str, str]]:
    """
    Registers every command sub-parser and builds the help registry.
    """
    logger.debug("Initializing command registration...")
    help_registry: Dict[str, Dict[str, str]] = {}
    for module in COMMAND_MODULES:
        module.register_help(help_registry, prog)
    for module in COMMAND_MODULES:
        if module is help_cmd:
            help_cmd.register(subparsers, config, help_registry, prog)
        else:
            module.register(subparsers, config)
    logger.debug(f"Registered commands: {', '.join(help_registry)}")
    return help_registry


def build_parser(config: HomLieConfig) -> Tuple[argparse.ArgumentParser, Dict[str, Dict[str, str]]]:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Biderivations, centroids and commuting maps of Hom-Lie algebras over the rationals.",
    )
    _global_options(parser)
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    registry = register_all(subparsers, config)
    return parser, registry


def _report_error(out: TextIO, argv: List[str], error: HomLieError):
    if "--json" in argv:
        out.write(io_utils.dumps_json({"error": type(error).__name__, "message": str(error),
                                       "exit_code": error.exit_code}) + "\n")
        return
    out.write(f"Error: {error}\n")
    if isinstance(error, ValidationError) and error.report is not None:
        out.write(report_utils.format_status_report(error.report.status(), title="Validation"))


def run(argv: Optional[Sequence[str]] = None, config: Optional[HomLieConfig] = None,
        out: Optional[TextIO] = None) -> int:
    """Parses argv, dispatches to the command handler and returns the process exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    if config is None:
        config = resolve_config(preparse(argv).config)
        if config is None:
            out.write("Error: configuration failed to load\n")
            return 2
    parser, _ = build_parser(config)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    try:
        return args.handler(args, config, out)
    except HomLieError as e:
        logger.warning(f"{args.command} failed: {e}")
        _report_error(out, argv, e)
        return e.exit_code
    except Exception as e:
        logger.error(f"Unhandled exception in the {args.command} command: {e}", exc_info=True)
        out.write(f"Error: internal error in {args.command}: {type(e).__name__}\n")
        return 3
