import json

import pytest

from mcdeform import io
from mcdeform.cli import main
from mcdeform.core import TruncationContext
from mcdeform.dgla import DGLAMorphism, tensor_with_m
from mcdeform.fixtures import emit_fixture, get_fixture, list_fixtures
from mcdeform.samples import random_mc


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def run_json(capsys, *argv):
    code, captured = run(capsys, *(argv + ('--json',)))
    return code, json.loads(captured.out)


def write_element(path, g, terms, degree=1, order=1, params=1):
    ambient = tensor_with_m(g, TruncationContext(params, order))
    io.write_json(io.element_to_dict(ambient.element(degree, terms)), path)
    return str(path)


@pytest.fixture
def files(tmp_path):
    """Every bundled example written to ``tmp_path``."""
    return {name: str(emit_fixture(name, tmp_path))
            for name in list_fixtures()}


def test_examples_list(capsys):
    code, payload = run_json(capsys, 'examples', 'list')
    assert code == 0
    names = [e['name'] for e in payload['examples']]
    assert len(names) >= 6
    assert 'obstructed_square' in names


def test_examples_emit_is_stable(tmp_path, capsys):
    code, _ = run(capsys, 'examples', 'emit', '-o', str(tmp_path / 'a'))
    assert code == 0
    run(capsys, 'examples', 'emit', '--output', str(tmp_path / 'b'))
    for name in list_fixtures():
        first = (tmp_path / 'a' / '{}.json'.format(name)).read_bytes()
        second = (tmp_path / 'b' / '{}.json'.format(name)).read_bytes()
        assert first == second


def test_validate(files, capsys):
    code, payload = run_json(capsys, 'validate', files['abelian_two_term'],
                             files['contractible_pair'],
                             files['nonstrict_linf'])
    assert code == 0
    assert payload['ok']


def test_validate_element_file(files, capsys):
    code, _ = run(capsys, 'validate', files['square_element'])
    assert code == 0


@pytest.mark.parametrize('name,axiom', [
    ('broken_leibniz', 'leibniz'),
    ('broken_jacobi', 'jacobi'),
])
def test_validate_broken(files, capsys, name, axiom):
    code, payload = run_json(capsys, 'validate', files[name])
    assert code == 1
    failed = [c['name'] for r in payload['reports'] for c in r['checks']
              if not c['passed']]
    assert failed == [axiom]


def test_validate_unreadable(tmp_path, capsys):
    code, captured = run(capsys, 'validate', str(tmp_path / 'missing.json'))
    assert code == 2
    assert 'error' in captured.err

    bad = tmp_path / 'bad.json'
    bad.write_text('not json')
    assert run(capsys, 'validate', str(bad))[0] == 2


def test_lift_obstructed(files, capsys):
    code, payload = run_json(capsys, 'mc', 'lift',
                             files['obstructed_square'],
                             files['square_element'], '--order', '2')
    assert code == 4
    assert payload['status'] == 'obstructed'
    assert payload['obstruction']['level'] == 'o2'
    assert payload['obstruction']['order'] == 2


def test_lift_at_same_order(files, capsys):
    code, payload = run_json(capsys, 'mc', 'lift',
                             files['obstructed_square'],
                             files['square_element'], '--order', '1')
    assert code == 0
    assert payload['element']['terms'] == [['v', [1], '1']]


def test_curvature(files, capsys):
    code, payload = run_json(capsys, 'mc', 'curvature',
                             files['obstructed_square'],
                             files['square_element'], '--order', '2')
    assert code == 0
    assert not payload['mc']
    assert payload['curvature']['terms'] == [['w', [2], '1']]


def test_curvature_wrong_degree(files, tmp_path, capsys):
    gamma = write_element(tmp_path / 'g.json', get_fixture('abelian_two_term'),
                          {('u', (1,)): 1}, degree=0)
    code, _ = run(capsys, 'mc', 'curvature', files['abelian_two_term'],
                  gamma)
    assert code == 3


def test_connect(files, tmp_path, capsys):
    g = get_fixture('abelian_two_term')
    omega = write_element(tmp_path / 'w.json', g, {('v', (1,)): 1})
    zero = write_element(tmp_path / 'z.json', g, {})
    code, payload = run_json(capsys, 'mc', 'connect',
                             files['abelian_two_term'], omega, zero)
    assert code == 0
    assert payload['status'] == 'connected'
    assert payload['gauge']['terms'] == [['u', [1], '1']]


def test_connect_obstructed(files, tmp_path, capsys):
    g = get_fixture('zero_differential')
    omega = write_element(tmp_path / 'w.json', g, {('x*e', (1,)): 1})
    zero = write_element(tmp_path / 'z.json', g, {})
    code, payload = run_json(capsys, 'mc', 'connect',
                             files['zero_differential'], zero, omega)
    assert code == 4
    assert payload['status'] == 'obstructed'
    assert payload['order'] == 1


def test_stabilizer(files, tmp_path, capsys):
    zero = write_element(tmp_path / 'z.json',
                         get_fixture('zero_differential'), {})
    code, payload = run_json(capsys, 'mc', 'stabilizer',
                             files['zero_differential'], zero)
    assert code == 0
    assert payload['dimension'] == 3


def test_gauge_act_and_compose(files, tmp_path, capsys):
    g = get_fixture('abelian_two_term')
    gamma = write_element(tmp_path / 'g.json', g, {('u', (1,)): 1},
                          degree=0)
    omega = write_element(tmp_path / 'w.json', g, {('v', (1,)): 1})
    code, payload = run_json(capsys, 'gauge', 'act',
                             files['abelian_two_term'], gamma, omega)
    assert code == 0
    assert payload['mc']
    assert payload['element']['terms'] == []

    code, payload = run_json(capsys, 'gauge', 'compose',
                             files['abelian_two_term'], gamma, gamma)
    assert code == 0
    assert payload['gauge']['terms'] == [['u', [1], '2']]


def test_gauge_path_then_integrate(files, tmp_path, capsys):
    g = get_fixture('abelian_two_term')
    gamma = write_element(tmp_path / 'g.json', g, {('u', (1,)): 3},
                          degree=0)
    omega = write_element(tmp_path / 'w.json', g, {('v', (1,)): 1})
    code, captured = run(capsys, 'gauge', 'path', files['abelian_two_term'],
                         gamma, omega, '--json')
    assert code == 0
    path = tmp_path / 'path.json'
    path.write_text(captured.out)

    code, payload = run_json(capsys, 'gauge', 'integrate-path',
                             files['abelian_two_term'], str(path))
    assert code == 0
    assert payload['gauge']['terms'] == [['u', [1], '3']]


def test_transfer(files, tmp_path, capsys):
    pair = get_fixture('contractible_pair')
    ambient = tensor_with_m(pair.target, TruncationContext(1, 2))
    chi = tmp_path / 'chi.json'
    io.write_json(io.element_to_dict(random_mc(ambient, 4).value), chi)
    code, payload = run_json(capsys, 'transfer', '--morphism',
                             files['contractible_pair'], '--mc', str(chi))
    assert code == 0
    assert set(payload) == {'omega', 'gauge'}


def test_linf_validate_and_push(files, tmp_path, capsys):
    code, _ = run(capsys, 'linf', 'validate', files['nonstrict_linf'])
    assert code == 0

    source = get_fixture('nonstrict_linf').source
    omega = write_element(tmp_path / 'w.json', source,
                          {('v', (1,)): 1, ('y', (2,)): -1}, order=2)
    code, payload = run_json(capsys, 'linf', 'push',
                             files['nonstrict_linf'], omega)
    assert code == 0
    assert ['u', [2], '1'] in payload['element']['terms']


def test_linf_correct(tmp_path, capsys):
    phi = get_fixture('nonstrict_linf')
    chain_map = DGLAMorphism.from_images(
        phi.source, phi.target, {x: {x: 1} for x in phi.source.space.names},
        check=False)
    path = tmp_path / 'chain.json'
    io.write_json(io.morphism_to_dict(chain_map), path)
    code, payload = run_json(capsys, 'linf', 'correct', str(path))
    assert code == 0
    assert [block['j'] for block in payload['orders']] == [1, 2]


def test_groupoid_pi0(files, tmp_path, capsys):
    g = get_fixture('abelian_two_term')
    first = write_element(tmp_path / 'a.json', g, {('v', (1,)): 1})
    second = write_element(tmp_path / 'b.json', g, {('v', (1,)): 2})
    code, payload = run_json(capsys, 'groupoid', 'pi',
                             files['abelian_two_term'], first, second)
    assert code == 0
    assert payload['classes'] == [[0, 1]]


def test_groupoid_crossed_check(files, capsys):
    code, payload = run_json(capsys, 'groupoid', 'crossed-check',
                             files['quantum_type'], '--order', '1',
                             '--seed', '1')
    assert code == 0
    assert payload['ok']


def test_order_must_be_positive(files):
    with pytest.raises(SystemExit):
        main(['mc', 'curvature', files['obstructed_square'],
              files['square_element'], '--order', '0'])


def test_parallel_validation(files, capsys):
    pytest.importorskip('dask')
    code, _ = run(capsys, 'validate', files['zero_differential'],
                  '--jobs', '2')
    assert code == 0
