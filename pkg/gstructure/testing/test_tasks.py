from gstructure import apps, tasks
from gstructure.conf import settings
import logging


class TestTasks:
    def test_eager_battery(self):
        report = tasks.run_battery.apply(args=('lemma-sp3',)).get()
        assert (report['name'], report['checks']) == ('lemma-sp3', 1)

    def test_atlas_row(self):
        row = tasks.atlas_row.apply(args=('SO', 15, 'SU')).get()
        assert (row['case'], row['min_k'], row['gap']) == ('B', 4, 8)


class TestSettings:
    def test_defaults(self, monkeypatch):
        monkeypatch.delenv('GSTRUCTURE_SETTINGS_MODULE', raising=False)
        settings.reset()
        assert settings.SETTINGS_MODULE == 'gstructure.settings'
        assert settings.CELERY_SETTINGS['task_always_eager']
        assert not settings.DEBUG
        assert not hasattr(settings, 'GOLDEN_DIR')

    def test_environment_variable(self, monkeypatch):
        monkeypatch.setenv('GSTRUCTURE_SETTINGS_MODULE', 'gstructure.settings.dev')
        settings.reset()
        assert settings.DEBUG
        assert settings.LOGGING['loggers']['gstructure.application']['level'] == 'DEBUG'

    def test_configure(self):
        settings.configure(DESK_SCALE_MAX_RANK=3)
        assert settings.DESK_SCALE_MAX_RANK == 3
        settings.reset()
        assert settings.DESK_SCALE_MAX_RANK == 6

    def test_logging_setup(self):
        apps.setup(force=True)
        logger = logging.getLogger('gstructure.application')
        assert not logger.propagate
        assert logger.level == logging.INFO
