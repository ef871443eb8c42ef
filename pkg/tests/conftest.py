import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def fresh_caches():
    from gku import units

    units.clear_caches()
    yield
    units.clear_caches()
