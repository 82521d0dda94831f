import logging
import sys

from . import commands
from .config import LOG_LEVELS, resolve_config

logger = logging.getLogger(__name__)


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    options = commands.preparse(argv)
    requested = (options.log_level or "").upper()

    # Logging Setup
    logging.basicConfig(
        level=requested if requested in LOG_LEVELS else logging.WARNING,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    if requested and requested not in LOG_LEVELS:
        logger.warning(f"Invalid --log-level '{options.log_level}'. Using the configured level.")
        requested = ""

    # Check Config
    config = resolve_config(options.config)
    if config is None:
        logger.critical("Configuration failed to load. Exiting.")
        return 2
    if not requested:
        logging.getLogger().setLevel(config.log_level)
    logger.debug("Configuration loaded.")

    return commands.run(argv, config)


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        logger.info("Interrupted.")
        sys.exit(3)
