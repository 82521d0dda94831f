import logging
from typing import Dict

from ..config import HomLieConfig
from ..services.loop import parse_laurent, verify_loop_centroid
from ..services.verify import VerdictStatus
from ..utils import cli_utils, io_utils, report_utils

logger = logging.getLogger(__name__)

COMMAND_NAME = "loop-check"


def register_help(help_registry: Dict[str, Dict[str, str]], prog: str):
    description = "Checks the centroid candidate alpha^(K+1) ⊗ Φ of the twisted sl2 loop algebra on a degree window."
    usage = (
        f"{prog} {COMMAND_NAME} --k K --phi \"<poly>\" --window N [--twist-power P] [--json]\n"
        f"  Φ is a Laurent polynomial such as \"1 + 2t^2 - t^-3\". The window N must exceed every |deg Φ|.\n"
        f"  --twist-power replaces K+1 in the candidate (any other value should fail).\n"
    )
    help_registry[COMMAND_NAME] = {"description": description, "usage": usage}
    logger.debug(f"Registered help for command: {COMMAND_NAME}")


def _handle(args, config: HomLieConfig, out) -> int:
    phi = parse_laurent(args.phi)
    verdict = verify_loop_centroid(args.k, phi, args.window, twist_power=args.twist_power)
    cli_utils.emit(out, args, io_utils.emit_verdict(verdict), report_utils.format_verdict(verdict))
    return 0 if verdict.status is VerdictStatus.CONFIRMED else 1


def register(subparsers, config: HomLieConfig):
    parser = subparsers.add_parser(COMMAND_NAME, help="windowed loop-algebra centroid check")
    parser.add_argument("--k", type=int, required=True, metavar="K")
    parser.add_argument("--phi", required=True, metavar="POLY")
    parser.add_argument("--window", type=int, required=True, metavar="N")
    parser.add_argument("--twist-power", type=int, metavar="P")
    cli_utils.add_json_flag(parser)
    parser.set_defaults(handler=_handle)
