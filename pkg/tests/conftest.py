import pytest
from hypothesis import HealthCheck, settings

from src.config import config
from src.kripke.loader import load_model

settings.register_profile(
    'workbench',
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile('workbench')


@pytest.fixture
def fix_chain():
    return load_model(config.fixture_path('FIX-CHAIN'))


@pytest.fixture
def fix_cd():
    return load_model(config.fixture_path('FIX-CD'))


@pytest.fixture
def fix_eq():
    return load_model(config.fixture_path('FIX-EQ'))
