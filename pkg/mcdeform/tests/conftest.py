import pytest
from hypothesis import HealthCheck, settings

from mcdeform.fixtures import get_fixture
from mcdeform.options import OPTIONS


settings.register_profile(
    'mcdeform', max_examples=25, deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile('mcdeform')


@pytest.fixture(autouse=True)
def _restore_options():
    saved = dict(OPTIONS)
    yield
    OPTIONS.clear()
    OPTIONS.update(saved)


@pytest.fixture
def abelian():
    return get_fixture('abelian_two_term')


@pytest.fixture
def square():
    return get_fixture('obstructed_square')


@pytest.fixture
def zero_diff():
    return get_fixture('zero_differential')


@pytest.fixture
def quantum():
    return get_fixture('quantum_type')


@pytest.fixture
def pair():
    return get_fixture('contractible_pair')
