import logging
from typing import Dict

from ..config import HomLieConfig

logger = logging.getLogger(__name__)
COMMAND_NAME = "help"


# --- Help Registration for THIS command ---
def register_help(help_registry: Dict[str, Dict[str, str]], prog: str):
    """Registers the help text for the 'help' command itself."""
    help_registry[COMMAND_NAME] = {
        "description": "Shows available commands or detailed help for a specific command.",
        "usage": f"{prog} {COMMAND_NAME}\n  Shows a list of all available commands.\n\n"
                 f"{prog} {COMMAND_NAME} <command>\n  Shows detailed usage for the specified <command>."
    }
    logger.debug(f"Registered help for command: {COMMAND_NAME}")


def format_help(help_registry: Dict[str, Dict[str, str]], prog: str, target: str = "") -> str:
    # Case 1: General help
    if not target:
        body = f"Available commands (run as '{prog} <command>'):\n\n"
        for cmd, info in sorted(help_registry.items()):
            body += f"{cmd}: {info.get('description', 'No description available.')}\n"
        return body + f"\nType `{prog} help <command>` for more details.\n"

    # Case 2: Specific command help
    target = target.lower()
    if target not in help_registry:
        return f"Unknown command: '{target}'. Type `{prog} help` to see available commands.\n"
    info = help_registry[target]
    body = f"{prog} {target}\n\nDescription: {info.get('description', 'N/A')}\n\n"
    usage = info.get("usage")
    return body + (f"Usage:\n{usage}\n" if usage else "Usage: N/A\n")


def register(subparsers, config: HomLieConfig, help_registry: Dict[str, Dict[str, str]], prog: str = "homlie"):
    """Registers the help sub-parser."""
    parser = subparsers.add_parser(COMMAND_NAME, help=help_registry[COMMAND_NAME]["description"])
    parser.add_argument("target", nargs="?", default="", help="command to describe")

    def handler(args, config_obj, out) -> int:
        text = format_help(help_registry, prog, args.target)
        out.write(text)
        return 0 if not args.target or args.target.lower() in help_registry else 2

    parser.set_defaults(handler=handler)
