"""
Settings access.

The settings module is named by the ``GSTRUCTURE_SETTINGS_MODULE``
environment variable and imported on first attribute access::

    from gstructure.conf import settings

    cap = settings.ENUMERATION_SAFETY_CAP
"""
import importlib
import os

ENVIRONMENT_VARIABLE = 'GSTRUCTURE_SETTINGS_MODULE'
DEFAULT_SETTINGS_MODULE = 'gstructure.settings'


class Settings:
    def __init__(self, settings_module: str):
        self.SETTINGS_MODULE = settings_module
        mod = importlib.import_module(settings_module)
        for name in dir(mod):
            if name.isupper():
                setattr(self, name, getattr(mod, name))

    def __repr__(self):
        return '<%s "%s">' % (self.__class__.__name__, self.SETTINGS_MODULE)


class LazySettings:
    _wrapped = None

    def _setup(self):
        module = os.environ.get(ENVIRONMENT_VARIABLE) or DEFAULT_SETTINGS_MODULE
        self._wrapped = Settings(module)

    def __getattr__(self, name):
        if self._wrapped is None:
            self._setup()
        return getattr(self._wrapped, name)

    def configure(self, **options):
        """Override individual settings (tests use this)."""
        if self._wrapped is None:
            self._setup()
        for name, value in options.items():
            setattr(self._wrapped, name, value)

    def reset(self):
        self._wrapped = None

    @property
    def configured(self) -> bool:
        return self._wrapped is not None


settings = LazySettings()
