import logging


class RequireDebugFalse(logging.Filter):
    def filter(self, record):
        from gstructure.conf import settings
        return not settings.DEBUG


class RequireDebugTrue(logging.Filter):
    def filter(self, record):
        from gstructure.conf import settings
        return settings.DEBUG
