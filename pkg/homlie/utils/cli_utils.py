"""Argument helpers shared by the command modules."""
import argparse
import logging
from typing import Any, Optional, TextIO

from ..config import HomLieConfig
from ..errors import ParseError
from ..services.algebra import HomLieAlgebra
from ..services.representation import Representation, adjoint, require_accepted_rep
from . import io_utils

logger = logging.getLogger(__name__)


def add_algebra_argument(parser: argparse.ArgumentParser):
    parser.add_argument("algebra", help="algebra file (.json, .yaml or .yml)")


def add_module_arguments(parser: argparse.ArgumentParser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--adjoint", type=int, metavar="K", help="use the adjoint module ad_K")
    group.add_argument("--module-file", metavar="F", help="module file with dim_v, rho and beta")


def add_json_flag(parser: argparse.ArgumentParser):
    parser.add_argument("--json", action="store_true", help="machine-readable output")


def load_algebra(args: argparse.Namespace, require_valid: bool = True) -> HomLieAlgebra:
    return io_utils.parse_algebra(args.algebra, require_valid=require_valid)


def adjoint_power(args: argparse.Namespace, config: HomLieConfig) -> int:
    return config.default_adjoint if getattr(args, "adjoint", None) is None else args.adjoint


def select_module(args: argparse.Namespace, L: HomLieAlgebra, config: HomLieConfig) -> Representation:
    """The module named by --module-file, else ad_K from --adjoint or the configured default."""
    if getattr(args, "module_file", None):
        return io_utils.parse_module(args.module_file, L)
    k = adjoint_power(args, config)
    V = adjoint(L, k)
    if config.debug_checks:
        require_accepted_rep(V)
    logger.debug(f"Using the adjoint module ad_{k}")
    return V


def module_label(args: argparse.Namespace, config: HomLieConfig) -> str:
    if getattr(args, "module_file", None):
        return "module file"
    return f"ad_{adjoint_power(args, config)}"


def require_adjoint(args: argparse.Namespace, verb: str):
    if getattr(args, "module_file", None):
        raise ParseError(f"{verb} works on adjoint modules only", path="--module-file")


def emit(out: TextIO, args: argparse.Namespace, payload: Any, text: str):
    """Writes the JSON payload in --json mode, the human report otherwise."""
    if getattr(args, "json", False):
        out.write(io_utils.dumps_json(payload) + "\n")
    else:
        out.write(text if text.endswith("\n") else text + "\n")


def optional_int(value: Optional[int], default: Optional[int]) -> Optional[int]:
    return default if value is None else value
