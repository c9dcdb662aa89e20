from gstructure.cache import clear_tables
from gstructure.conf import settings
import os
import pytest

GOLDEN_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'golden')


@pytest.fixture(autouse=True)
def fresh_settings():
    yield
    settings.reset()


@pytest.fixture
def clean_tables():
    clear_tables()
    yield
    clear_tables()


@pytest.fixture
def golden():
    def read(name):
        with open(os.path.join(GOLDEN_DIR, name), encoding='utf-8') as f:
            return f.read()
    return read
