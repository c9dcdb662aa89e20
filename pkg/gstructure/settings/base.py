import os

DEBUG = False

APPLICATION_NAME = 'gstructure'

# Largest number of weights a single enumeration may return.
ENUMERATION_SAFETY_CAP = int(os.environ.get('GSTRUCTURE_ENUMERATION_CAP', 10 ** 6))

# Rank ceiling for the dimension-minimum verification reports.
DESK_SCALE_MAX_RANK = 6

# Factored integers with longer decimal expansions render as ≈10^D.
DECIMAL_DIGITS_LIMIT = 40

ATLAS_MAX_ROWS = 10000

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'filters': {
        'require_debug_false': {
            '()': 'gstructure.log.RequireDebugFalse',
        },
        'require_debug_true': {
            '()': 'gstructure.log.RequireDebugTrue',
        },
    },
    'formatters': {
        'gstructure.server': {
            '()': 'tornado.log.LogFormatter',
            'fmt': '%(color)s[%(levelname)1.1s %(asctime)s %(module)s:%(lineno)d]%(end_color)s %(message)s',
            'datefmt': '%Y-%m-%d %H:%M:%S',
            'color': False,
        }
    },
    'handlers': {
        'console': {
            'level': 'DEBUG',
            'filters': ['require_debug_true'],
            'class': 'logging.StreamHandler',
            'formatter': 'gstructure.server',
        },
        'gstructure.server': {
            'level': 'WARNING',
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'gstructure.server',
        },
    },
    'loggers': {
        'gstructure': {
            'handlers': ['console'],
            'level': 'INFO',
        },
        'gstructure.application': {
            'handlers': ['gstructure.server'],
            'level': 'INFO',
            'propagate': False
        },
        'celery': {
            'handlers': ['gstructure.server'],
            'level': 'WARNING',
            'propagate': False
        },
        'celery.task': {
            'handlers': ['gstructure.server'],
            'level': 'WARNING',
            'propagate': False
        },
    }
}

##########
# CELERY #
##########

# All celery configuration options:
# http://docs.celeryproject.org/en/latest/userguide/configuration.html#configuration
CELERY_SETTINGS = {
    'broker_url': os.environ.get('GSTRUCTURE_BROKER', 'memory://'),
    'result_backend': 'cache+memory://',
    'task_always_eager': True,
    'task_eager_propagates': True,
    'task_serializer': 'json',
    'result_serializer': 'json',
    'accept_content': ['json'],
}
