from .base import *
import copy

DEBUG = True

LOGGING = copy.deepcopy(LOGGING)
LOGGING['formatters']['gstructure.server']['color'] = True
LOGGING['handlers']['gstructure.server']['level'] = 'DEBUG'
LOGGING['loggers']['gstructure.application']['level'] = 'DEBUG'
