import logging
from typing import Callable, Dict, List

from ..config import HomLieConfig
from ..errors import ConsistencyError, ParseError
from ..services.algebra import HomLieAlgebra
from ..services.maps import (
    MapSpace, bider_failures, bider_s_failures, cent_failures, central_subspace, com_failures, der_failures,
    solve_bider, solve_bider_s, solve_cent, solve_com, solve_derivations, special_subspace,
)
from ..services.representation import Representation
from ..utils import cli_utils, io_utils, report_utils

logger = logging.getLogger(__name__)

COMMAND_NAME = "solve"
KINDS = ("bider", "bider-s", "cent", "com", "der")
TITLES = {"bider": "Bider", "bider-s": "Bider_s", "cent": "Cent", "com": "Com", "der": "Der"}
FILTERED_TITLES = {("bider-s", "central"): "CBider_s", ("bider-s", "special"): "SBider_s",
                   ("com", "central"): "CCom", ("com", "special"): "SCom"}


# --- Help Registration ---
def register_help(help_registry: Dict[str, Dict[str, str]], prog: str):
    """Registers the help text for the solve command."""
    description = "Computes a space of biderivations, centroid elements, commuting maps or derivations."
    usage = (
        f"{prog} {COMMAND_NAME} {{bider|bider-s|cent|com}} <algebra> [--adjoint K | --module-file F] "
        f"[--central|--special] [--json]\n"
        f"  Solves the defining linear system exactly and prints a general element and a basis.\n"
        f"  --central / --special keep the maps with central values / the special ones (bider-s and com).\n\n"
        f"{prog} {COMMAND_NAME} der <algebra> --power K [--json]\n"
        f"  alpha^K-derivations of the algebra.\n"
    )
    help_registry[COMMAND_NAME] = {"description": description, "usage": usage}
    logger.debug(f"Registered help for command: {COMMAND_NAME}")


def _failure_check(kind: str, L: HomLieAlgebra, V: Representation, config: HomLieConfig) -> Callable:
    if kind == "bider":
        return lambda m: bider_failures(L, V, m)
    if kind == "bider-s":
        return lambda m: bider_s_failures(L, V, m, with_left=True)
    if kind == "cent":
        return lambda m: cent_failures(L, V, m)
    if kind == "com":
        return lambda m: com_failures(L, V, m, random_checks=config.random_checks, seed=config.seed)
    return lambda m: der_failures(L, V, m)


def recheck(space: MapSpace, kind: str, config: HomLieConfig) -> int:
    """Re-evaluates every basis map against its defining identities; returns the number checked."""
    check = _failure_check(kind, space.algebra, space.module, config)
    for t, m in enumerate(space.basis):
        failed: List[str] = check(m)
        if failed:
            logger.error(f"Basis map {t + 1} of {kind} fails its own constraints: {failed[0]}")
            raise ConsistencyError(f"basis map {t + 1} of {kind} fails: {', '.join(failed)}")
    return space.dim


def compute(kind: str, L: HomLieAlgebra, V: Representation, config: HomLieConfig) -> MapSpace:
    if kind == "bider":
        return solve_bider(L, V)
    if kind == "bider-s":
        return solve_bider_s(L, V, debug_checks=config.debug_checks)
    if kind == "cent":
        return solve_cent(L, V)
    return solve_com(L, V)


def _handle(args, config: HomLieConfig, out) -> int:
    selected = "central" if args.central else "special" if args.special else None
    if selected and args.kind not in ("bider-s", "com"):
        raise ParseError(f"--{selected} applies to bider-s and com only", path=f"--{selected}")
    L = cli_utils.load_algebra(args)
    if args.kind == "der":
        cli_utils.require_adjoint(args, "solve der")
        space = solve_derivations(L, args.power)
        label = f"alpha^{args.power}"
        title = f"Der_{args.power}"
        # derivations are checked against ad_k with k = power
        recheck(space, "der", config)
    else:
        V = cli_utils.select_module(args, L, config)
        label = cli_utils.module_label(args, config)
        space = compute(args.kind, L, V, config)
        recheck(space, args.kind, config)
        title = TITLES[args.kind]
        if selected:
            space = central_subspace(space) if selected == "central" else special_subspace(space)
            title = FILTERED_TITLES[(args.kind, selected)]
        title = f"{title}(L, {label})"
    logger.info(f"{title}: dim {space.dim}")
    payload = {"filter": selected, "module": label, "space": io_utils.emit_map_space(space), "verified": True}
    cli_utils.emit(out, args, payload, report_utils.format_space_report(space, title))
    return 0


def register(subparsers, config: HomLieConfig):
    """Registers the solve sub-parser."""
    parser = subparsers.add_parser(COMMAND_NAME, help="compute a map space")
    parser.add_argument("kind", choices=KINDS)
    cli_utils.add_algebra_argument(parser)
    cli_utils.add_module_arguments(parser)
    filters = parser.add_mutually_exclusive_group()
    filters.add_argument("--central", action="store_true", help="keep maps with values in Z_V(L)")
    filters.add_argument("--special", action="store_true", help="keep the special maps")
    parser.add_argument("--power", type=int, default=0, metavar="K", help="twist power for der (default 0)")
    cli_utils.add_json_flag(parser)
    parser.set_defaults(handler=_handle)
