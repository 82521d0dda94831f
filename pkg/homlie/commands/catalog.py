import logging
from typing import Dict, List

from ..config import HomLieConfig
from ..errors import ParseError
from ..services.catalog import CATALOG, build
from ..utils import cli_utils, io_utils

logger = logging.getLogger(__name__)

COMMAND_NAME = "catalog"


def register_help(help_registry: Dict[str, Dict[str, str]], prog: str):
    description = "Lists the built-in algebras or writes one as an algebra file."
    usage = (
        f"{prog} {COMMAND_NAME} list [--json]\n"
        f"  Names, parameters and defaults.\n\n"
        f"{prog} {COMMAND_NAME} emit <name> [--params key=value ...] [--output FILE]\n"
        f"  Writes the algebra file (JSON, or YAML for .yaml/.yml) to FILE or stdout.\n"
        f"  Example: {prog} {COMMAND_NAME} emit example314 --params a=1 b=2 lambda=3 mu=5\n"
    )
    help_registry[COMMAND_NAME] = {"description": description, "usage": usage}
    logger.debug(f"Registered help for command: {COMMAND_NAME}")


def parse_params(items: List[str]) -> Dict[str, str]:
    params = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise ParseError(f"expected key=value, got '{item}'", path="params")
        params[key] = value
    return params


def _entry_line(entry: Dict) -> str:
    params = ", ".join(f"{p}={entry['defaults'][p]}" for p in entry["params"])
    return f"{entry['name']}({params}): {entry['description']}\n"


def _handle(args, config: HomLieConfig, out) -> int:
    if args.action == "list":
        entries = [
            {"name": e.name, "params": list(e.params), "defaults": dict(e.defaults), "description": e.description}
            for e in CATALOG.values()
        ]
        text = "".join(_entry_line(e) for e in entries)
        cli_utils.emit(out, args, entries, text)
        return 0

    if not args.name:
        raise ParseError("catalog emit needs an algebra name", path="name")
    L = build(args.name, parse_params(args.params))
    document = io_utils.emit_algebra(L)
    if args.output:
        io_utils.write_document(document, args.output)
        out.write(f"Wrote {args.name} to {args.output}\n")
    else:
        out.write(io_utils.dumps_json(document) + "\n")
    return 0


def register(subparsers, config: HomLieConfig):
    parser = subparsers.add_parser(COMMAND_NAME, help="built-in algebras")
    parser.add_argument("action", choices=("list", "emit"))
    parser.add_argument("name", nargs="?", help="catalog algebra for emit")
    parser.add_argument("--params", nargs="*", default=[], metavar="KEY=VALUE", help="rational parameters")
    parser.add_argument("--output", metavar="FILE", help="write the algebra file here")
    cli_utils.add_json_flag(parser)
    parser.set_defaults(handler=_handle)
