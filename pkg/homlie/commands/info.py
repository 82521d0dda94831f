import logging
from typing import Dict

from ..config import HomLieConfig
from ..errors import HypothesisError
from ..services.algebra import center, derived, is_perfect
from ..services.reduction import center_sequence
from ..utils import cli_utils, io_utils, report_utils

logger = logging.getLogger(__name__)

COMMAND_NAME = "info"


def register_help(help_registry: Dict[str, Dict[str, str]], prog: str):
    description = "Shows the structure of an algebra: brackets, twist, center, derived algebra, center sequence."
    usage = f"{prog} {COMMAND_NAME} <algebra> [--json]\n"
    help_registry[COMMAND_NAME] = {"description": description, "usage": usage}
    logger.debug(f"Registered help for command: {COMMAND_NAME}")


def _handle(args, config: HomLieConfig, out) -> int:
    L = cli_utils.load_algebra(args)
    try:
        dims = center_sequence(L, config.max_levels).dims
    except HypothesisError as e:
        logger.info(f"No center sequence: {e}")
        dims = None
    payload = {
        "algebra": io_utils.emit_algebra(L),
        "alpha_invertible": L.validation.alpha_invertible,
        "center_dim": center(L).dim,
        "derived_dim": derived(L).dim,
        "perfect": is_perfect(L),
        "center_sequence": dims,
    }
    text = report_utils.format_algebra_info(L)
    text += "center sequence: " + (" -> ".join(map(str, dims)) if dims else "not defined (alpha is not surjective)")
    cli_utils.emit(out, args, payload, text)
    return 0


def register(subparsers, config: HomLieConfig):
    parser = subparsers.add_parser(COMMAND_NAME, help="describe an algebra")
    cli_utils.add_algebra_argument(parser)
    cli_utils.add_json_flag(parser)
    parser.set_defaults(handler=_handle)
