import pytest

from mcdeform import io
from mcdeform.exceptions import FormatError
from mcdeform.fixtures import (FIXTURES, emit_fixture, fixture_payload,
                               get_fixture, list_fixtures)


def test_list_fixtures():
    names = list_fixtures()
    assert names == sorted(names)
    assert len(names) == len(FIXTURES)


def test_unknown_fixture():
    with pytest.raises(FormatError, match='available'):
        get_fixture('nope')


def test_descriptions():
    assert FIXTURES['abelian_two_term'].description.startswith('``u``')
    assert FIXTURES['broken_jacobi'].description == 'broken jacobi'


def test_broken_fixtures_name_their_axiom():
    broken = [f for f in FIXTURES.values() if not f.valid]
    assert {f.failing_axiom for f in broken} == {
        'd_squared', 'antisymmetry', 'jacobi', 'leibniz'}


@pytest.mark.parametrize('name', sorted(FIXTURES))
def test_emit_matches_payload(tmp_path, name):
    path = emit_fixture(name, tmp_path / 'out')
    assert path.name == '{}.json'.format(name)
    assert path.read_text() == io.dumps(fixture_payload(name))


def test_element_payload_carries_algebra():
    data = fixture_payload('square_element')
    g = io.algebra_from_dict(data['algebra'])
    assert g == get_fixture('obstructed_square')
    assert data['terms'] == [['v', [1], '1']]
