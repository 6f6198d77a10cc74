import logging.config
import sys

from src.application.cli import main
from src.infrastructure.config.settings import settings

logging.config.dictConfig(settings.get_logging_config())
logger = logging.getLogger(__name__)


if __name__ == "__main__":
    logger.info(f"Starting {settings.app_name} {settings.app_version} in {settings.environment.value} mode")
    sys.exit(main())
