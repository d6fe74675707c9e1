import json

import pytest

from mcdeform import io
from mcdeform.core import TruncationContext
from mcdeform.dgla import tensor_with_m
from mcdeform.exceptions import FormatError
from mcdeform.fixtures import FIXTURES, emit_fixture, get_fixture
from mcdeform.gauge import path_from_gauge
from mcdeform.samples import random_gauge, random_mc

from .strategies import ambient_of


@pytest.mark.parametrize('name', [n for n, f in FIXTURES.items()
                                  if f.kind == 'dgla'])
def test_algebra_round_trip(name):
    g = get_fixture(name)
    data = json.loads(io.dumps(io.algebra_to_dict(g)))
    assert io.algebra_from_dict(data, check=False) == g


def test_morphism_round_trip(tmp_path, pair):
    path = emit_fixture('contractible_pair', tmp_path)
    phi = io.load_morphism(path)
    assert phi.source == pair.source and phi.target == pair.target
    for d in pair.source.space.degrees:
        assert phi.matrix(d) == pair.matrix(d)


def test_morphism_with_file_references(tmp_path, pair):
    io.write_json(io.algebra_to_dict(pair.source), tmp_path / 'g.json')
    io.write_json(io.algebra_to_dict(pair.target), tmp_path / 'h.json')
    data = io.morphism_to_dict(pair, 'g.json', 'h.json')
    io.write_json(data, tmp_path / 'phi.json')
    kind, phi = io.load(tmp_path / 'phi.json')
    assert kind == 'morphism'
    assert phi.matrix(1) == pair.matrix(1)


@pytest.mark.parametrize('name', [n for n, f in FIXTURES.items()
                                  if f.kind == 'linf'])
def test_linf_round_trip(tmp_path, name):
    path = emit_fixture(name, tmp_path)
    kind, phi = io.load(path)
    assert kind == 'linf'
    assert phi == get_fixture(name)
    assert phi.horizon == 3


def test_element_round_trip(zero_diff):
    ambient = tensor_with_m(zero_diff, TruncationContext(2, 2))
    omega = random_mc(ambient, 5).value
    data = io.element_to_dict(omega)
    assert data['params'] == 2 and data['order'] == 2
    assert io.element_from_dict(data, io.ambient_for(zero_diff, data)) == \
        omega


def test_element_format():
    x = get_fixture('square_element')
    assert io.element_to_dict(x) == {
        'kind': 'element', 'degree': 1, 'params': 1, 'order': 1,
        'terms': [['v', [1], '1']]}


def test_path_round_trip(abelian):
    ambient = ambient_of(abelian, order=2)
    path = path_from_gauge(random_gauge(ambient, 1), random_mc(ambient, 2))
    data = json.loads(io.dumps(io.path_to_dict(path)))
    back = io.path_from_dict(data, io.ambient_for(abelian, data))
    assert back.one_part == path.one_part
    assert back.form_part == path.form_part


def test_context_overrides():
    data = {'params': 1, 'order': 1}
    assert io.context_from_dict(data).order == 1
    assert io.context_from_dict(data, 2, 3) == TruncationContext(2, 3)
    assert io.context_from_dict({}).order == 3


def test_dumps_is_stable(abelian):
    data = io.algebra_to_dict(abelian)
    assert io.dumps(data) == io.dumps(json.loads(io.dumps(data)))
    assert io.dumps(data).endswith('\n')


def test_invalid_json(tmp_path):
    path = tmp_path / 'bad.json'
    path.write_text('{"degrees": ')
    with pytest.raises(FormatError):
        io.read_json(path)


def test_missing_file(tmp_path):
    with pytest.raises(OSError):
        io.load(tmp_path / 'missing.json')


@pytest.mark.parametrize('data', [
    {},
    {'degrees': [0, 1]},
    {'degrees': {'zero': ['u']}},
    {'degrees': {'0': ['u'], '1': ['v']}, 'differential': [['u']]},
    {'degrees': {'0': ['u'], '1': ['v']},
     'differential': [['u', [['v', '1.5']]]]},
    {'degrees': {'0': ['u'], '1': ['v']},
     'bracket': [['u', [['v', '1']]]]},
])
def test_malformed_algebras(data):
    with pytest.raises(FormatError):
        io.algebra_from_dict(data)


def test_malformed_element(abelian):
    ambient = ambient_of(abelian)
    with pytest.raises(FormatError):
        io.element_from_dict({'degree': 1}, ambient)
    with pytest.raises(FormatError):
        io.element_from_dict({'degree': 1, 'terms': [['v', 1]]}, ambient)
    with pytest.raises(FormatError):
        io.element_from_dict({'degree': 1, 'terms': [['v', [1], '1/0']]},
                             ambient)


def test_unknown_kind(tmp_path):
    path = tmp_path / 'thing.json'
    io.write_json({'kind': 'thing'}, path)
    with pytest.raises(FormatError):
        io.load(path)
