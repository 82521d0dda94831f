import logging
from typing import Dict

from ..config import HomLieConfig
from ..errors import ConsistencyError
from ..services import verify as verify_service
from ..services.identities import run_identity_suite
from ..utils import cli_utils, io_utils, report_utils

logger = logging.getLogger(__name__)

COMMAND_NAME = "verify"
TARGETS = ("thm36", "thm37", "thm43", "prop47", "schur", "lemmas")


# --- Help Registration ---
def register_help(help_registry: Dict[str, Dict[str, str]], prog: str):
    """Registers the help text for the verify command."""
    description = "Checks a structural statement on one algebra and reports a three-valued verdict."
    usage = (
        f"{prog} {COMMAND_NAME} {{thm36|thm43|lemmas}} <algebra> [--adjoint K | --module-file F] [--json]\n"
        f"  thm36: skew biderivations come from the centroid; thm43: Cent = Com; lemmas: identity suites.\n\n"
        f"{prog} {COMMAND_NAME} {{thm37|prop47}} <algebra> [--adjoint K] [--seed N] [--trials N] [--json]\n"
        f"  thm37: Bider_s of a centerless perfect algebra; prop47: Com = Cent + CCom.\n\n"
        f"{prog} {COMMAND_NAME} schur <algebra> [--adjoint K] [--s S] [--seed N] [--json]\n"
        f"  Module maps ad_K -> ad_(K+S) are multiples of alpha^(S+1).\n\n"
        f"  Verdicts: confirmed (exit 0), inconclusive-over-Q (exit 0), hypotheses-failed (exit 1).\n"
    )
    help_registry[COMMAND_NAME] = {"description": description, "usage": usage}
    logger.debug(f"Registered help for command: {COMMAND_NAME}")


def _lemmas(L, V) -> verify_service.Verdict:
    verdict = verify_service.Verdict("lemmas")
    results = run_identity_suite(L, V)
    for name, (ok, message) in results.items():
        verdict.check(name, ok, message)
    failed = [name for name, (ok, _) in results.items() if not ok]
    if failed:
        raise ConsistencyError(f"identity suite failed: {', '.join(failed)}")
    return verdict


def _handle(args, config: HomLieConfig, out) -> int:
    L = cli_utils.load_algebra(args)
    seed = cli_utils.optional_int(args.seed, config.seed)
    trials = cli_utils.optional_int(args.trials, config.falsifier_trials)
    k = cli_utils.adjoint_power(args, config)
    target = args.target
    if target in ("thm37", "prop47", "schur"):
        cli_utils.require_adjoint(args, f"verify {target}")
    if target == "thm36":
        verdict = verify_service.verify_thm36(L, cli_utils.select_module(args, L, config))
    elif target == "thm37":
        verdict = verify_service.verify_thm37(L, k, trials=trials, seed=seed)
    elif target == "thm43":
        verdict = verify_service.verify_thm43(L, cli_utils.select_module(args, L, config))
    elif target == "prop47":
        verdict = verify_service.verify_prop47(L, k)
    elif target == "schur":
        verdict = verify_service.schur_check(L, k, args.s, trials=trials, seed=seed)
    else:
        verdict = _lemmas(L, cli_utils.select_module(args, L, config))
    logger.info(f"verify {target}: {verdict.status.value}")
    cli_utils.emit(out, args, io_utils.emit_verdict(verdict), report_utils.format_verdict(verdict))
    return 1 if verdict.status is verify_service.VerdictStatus.HYPOTHESES_FAILED else 0


def register(subparsers, config: HomLieConfig):
    """Registers the verify sub-parser."""
    parser = subparsers.add_parser(COMMAND_NAME, help="verify a structural statement")
    parser.add_argument("target", choices=TARGETS)
    cli_utils.add_algebra_argument(parser)
    cli_utils.add_module_arguments(parser)
    parser.add_argument("--s", type=int, default=0, metavar="S", help="shift for schur (default 0)")
    parser.add_argument("--seed", type=int, metavar="N", help=f"falsifier seed (config default {config.seed})")
    parser.add_argument("--trials", type=int, metavar="N",
                        help=f"falsifier trials (config default {config.falsifier_trials})")
    cli_utils.add_json_flag(parser)
    parser.set_defaults(handler=_handle)
