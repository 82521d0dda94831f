import logging
from typing import Dict

from ..config import HomLieConfig
from ..utils import cli_utils, io_utils, report_utils

logger = logging.getLogger(__name__)

COMMAND_NAME = "validate"


# --- Help Registration ---
def register_help(help_registry: Dict[str, Dict[str, str]], prog: str):
    """Registers the help text for the validate command."""
    description = "Checks the Hom-Lie axioms of an algebra file (and optionally a module file)."
    usage = (
        f"{prog} {COMMAND_NAME} <algebra> [--module-file F] [--json]\n"
        f"  Reports Hom-Jacobi and multiplicativity failures; exit 1 if any axiom fails.\n"
    )
    help_registry[COMMAND_NAME] = {"description": description, "usage": usage}
    logger.debug(f"Registered help for command: {COMMAND_NAME}")


def _label(names, indices) -> str:
    return "(" + ",".join(names[i] for i in indices) + ")"


def _handle(args, config: HomLieConfig, out) -> int:
    L = cli_utils.load_algebra(args, require_valid=False)
    report = L.validation
    names = L.basis_names
    jacobi = [_label(names, t) for t, _ in report.hom_jacobi_failures]
    mult = [_label(names, p) for p, _ in report.multiplicativity_failures]
    payload = {
        "algebra": {
            "accepted": report.accepted,
            "hom_jacobi_failures": jacobi,
            "multiplicativity_failures": mult,
            "alpha_invertible": report.alpha_invertible,
        }
    }
    text = report_utils.format_status_report(report.status(), title=f"Algebra {args.algebra}")
    text += report_utils.format_failures("Hom-Jacobi failures", jacobi)
    text += report_utils.format_failures("Multiplicativity failures", mult)
    accepted = report.accepted

    if args.module_file:
        V = io_utils.parse_module(args.module_file, L, require_valid=False)
        module_report = V.validation
        twist = [names[i] for i, _ in module_report.twist_failures]
        bracket = [_label(names, p) for p, _ in module_report.bracket_failures]
        payload["module"] = {"accepted": module_report.accepted, "twist_failures": twist, "bracket_failures": bracket}
        text += "\n" + report_utils.format_status_report(module_report.status(), title=f"Module {args.module_file}")
        text += report_utils.format_failures("Twist failures", twist)
        text += report_utils.format_failures("Bracket-action failures", bracket)
        accepted = accepted and module_report.accepted

    cli_utils.emit(out, args, payload, text)
    if not accepted:
        logger.warning(f"Validation failed for {args.algebra}")
    return 0 if accepted else 1


def register(subparsers, config: HomLieConfig):
    """Registers the validate sub-parser."""
    parser = subparsers.add_parser(COMMAND_NAME, help="check the Hom-Lie axioms")
    cli_utils.add_algebra_argument(parser)
    parser.add_argument("--module-file", metavar="F", help="also check a module file")
    cli_utils.add_json_flag(parser)
    parser.set_defaults(handler=_handle)
