from gstructure.conf import settings
import logging.config
import logging

logger = logging.getLogger('gstructure.application')

_configured = False


def setup(force: bool = False) -> None:
    """Load settings and apply the logging configuration once per process."""
    global _configured
    if _configured and not force:
        return
    logging.config.dictConfig(settings.LOGGING)
    _configured = True
    logger.debug('Configured from %s.', settings.SETTINGS_MODULE)
