import logging
from typing import Dict

from ..config import HomLieConfig
from ..errors import HypothesisError
from ..services.reduction import center_sequence, com_sequence, reduce_bider_s, reduce_com
from ..services.representation import adjoint
from ..utils import cli_utils, io_utils, report_utils

logger = logging.getLogger(__name__)

COMMAND_NAME = "reduce"


def register_help(help_registry: Dict[str, Dict[str, str]], prog: str):
    """Registers the help text for the reduce command."""
    description = "Rebuilds Bider_s or Com level by level along the quotient sequences and checks the result."
    usage = (
        f"{prog} {COMMAND_NAME} bider-s <algebra> [--adjoint K] [--max-levels N] [--json]\n"
        f"  Quotients by centers, restricts to derived subalgebras, and lifts back.\n\n"
        f"{prog} {COMMAND_NAME} com <algebra> [--adjoint K | --module-file F] [--max-levels N] [--json]\n"
        f"  Quotients the module by the annihilator of L' and lifts back.\n"
    )
    help_registry[COMMAND_NAME] = {"description": description, "usage": usage}
    logger.debug(f"Registered help for command: {COMMAND_NAME}")


def _sequence_dims(kind: str, L, V, max_levels):
    try:
        if kind == "bider-s":
            return center_sequence(L, max_levels).dims
        return com_sequence(L, V, max_levels).dims
    except HypothesisError as e:
        logger.info(f"Quotient sequence not defined: {e}")
        return None


def _handle(args, config: HomLieConfig, out) -> int:
    L = cli_utils.load_algebra(args)
    max_levels = cli_utils.optional_int(args.max_levels, config.max_levels)
    if args.kind == "bider-s":
        cli_utils.require_adjoint(args, "reduce bider-s")
        k = cli_utils.adjoint_power(args, config)
        V = adjoint(L, k)
        result = reduce_bider_s(L, k, max_levels)
    else:
        V = cli_utils.select_module(args, L, config)
        result = reduce_com(L, V, max_levels)
    dims = _sequence_dims(args.kind, L, V, max_levels)
    label = cli_utils.module_label(args, config)

    payload = {
        "kind": args.kind,
        "module": label,
        "sequence": dims,
        "trace": io_utils.emit_trace(result.trace),
        "stalled": result.stalled,
        "matches_direct": result.matches_direct,
        "space": io_utils.emit_map_space(result.space),
    }
    text = f"Reduction of {args.kind} on {label}\n"
    if dims:
        text += "quotient sequence dimensions: " + " -> ".join(map(str, dims)) + "\n"
    text += report_utils.format_trace(result.trace)
    if result.stalled:
        text += "stalled: finished with the direct solver\n"
    text += f"matches direct solver: {result.matches_direct}\n"
    text += report_utils.format_space_report(result.space)
    cli_utils.emit(out, args, payload, text)
    return 0


def register(subparsers, config: HomLieConfig):
    parser = subparsers.add_parser(COMMAND_NAME, help="reduce along quotient sequences")
    parser.add_argument("kind", choices=("bider-s", "com"))
    cli_utils.add_algebra_argument(parser)
    cli_utils.add_module_arguments(parser)
    parser.add_argument("--max-levels", type=int, metavar="N", help="stop after N levels")
    cli_utils.add_json_flag(parser)
    parser.set_defaults(handler=_handle)
