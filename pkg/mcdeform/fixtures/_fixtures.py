from dataclasses import dataclass
from pathlib import Path

from .. import io
from ..dgla import (DGLAMorphism, DGLieAlgebra, affine_lie_algebra,
                    contractible_unit, current_algebra, exterior_algebra,
                    heisenberg_lie_algebra, square_zero_extension)
from ..exceptions import FormatError


def abelian_two_term():
    """``u`` in degree 0, ``v`` in degree 1, ``du = v``."""
    return DGLieAlgebra({0: ['u'], 1: ['v']}, {'u': {'v': 1}},
                        name='abelian_two_term')


def zero_differential():
    """Heisenberg algebra tensored with ``Q[e]``, ``|e| = 1``, ``d = 0``.

    Every degree one element is Maurer-Cartan and the gauge group is
    non-abelian.
    """
    return current_algebra(heisenberg_lie_algebra(),
                           exterior_algebra({'e': 1}),
                           name='zero_differential')


def obstructed_square():
    """``[v, v] = 2w``: ``c h v`` lifts to order two only if ``c = 0``."""
    return DGLieAlgebra({1: ['v'], 2: ['w']}, {}, {('v', 'v'): {'w': 2}},
                        name='obstructed_square')


def quantum_type():
    """Quantum type algebra with a non-zero degree ``-1`` part."""
    dga = square_zero_extension({'a': -1, 'b': 0, 'e': 1},
                                {'a': {'b': 1}})
    return current_algebra(heisenberg_lie_algebra(), dga,
                           name='quantum_type')


def _pair_source():
    return current_algebra(affine_lie_algebra(), exterior_algebra({'e': 1}),
                           name='affine_current')


def _pair_target():
    dga = exterior_algebra({'e': 1}).tensor(contractible_unit(0))
    return current_algebra(affine_lie_algebra(), dga,
                           name='affine_current_extended')


def contractible_pair():
    """Inclusion ``k (x) A -> k (x) (A (x) C)`` with ``C`` contractible,
    a quasi-isomorphism."""
    source, target = _pair_source(), _pair_target()
    images = {x: {x: 1} for x in source.space.names}
    return DGLAMorphism.from_images(source, target, images)


def _square_killed():
    return DGLieAlgebra({1: ['v', 'y'], 2: ['w']}, {'y': {'w': 1}},
                        {('v', 'v'): {'w': 2}}, name='square_killed')


def _square_target():
    return DGLieAlgebra({1: ['v', 'y', 'u'], 2: ['w']},
                        {'y': {'w': 1}, 'u': {'w': 1}},
                        name='square_target')


def nonstrict_linf():
    """L-infinity morphism whose linear part does not preserve brackets.

    ``phi_1`` is the identity on names and ``phi_2(v, v) = 2u`` absorbs
    ``phi_1[v, v] = 2w = d(2u)``.
    """
    from ..linf import LInfMorphism

    source, target = _square_killed(), _square_target()
    first = {(x,): {x: 1} for x in source.space.names}
    return LInfMorphism(source, target,
                        {1: first, 2: {('v', 'v'): {'u': 2}}}, horizon=3)


def nonstrict_gauge_linf():
    """Non-strict L-infinity quasi-isomorphism with a non-abelian gauge
    group.

    The source is the affine current algebra over ``Q (+) <a, b>``,
    ``da = b``; the morphism comes from the homotopy ``K(x, y*b) = cm1``
    into a contractible summand ``<cm1, dcm1>``.
    """
    from ..linf import homotopy_extension

    source = current_algebra(affine_lie_algebra(), contractible_unit(0),
                             name='affine_cone')
    return homotopy_extension(source, {('x', 'y*b'): 1}, horizon=3)


def square_element():
    """``h v`` over the ``[v, v] = 2w`` algebra, at order one."""
    from ..dgla import tensor_with_m
    from ..core import TruncationContext

    ambient = tensor_with_m(obstructed_square(), TruncationContext(1, 1))
    return ambient.element(1, {('v', (1,)): 1})


def broken_d_squared():
    return DGLieAlgebra({0: ['a'], 1: ['b'], 2: ['c']},
                        {'a': {'b': 1}, 'b': {'c': 1}},
                        name='broken_d_squared', check=False)


def broken_antisymmetry():
    return DGLieAlgebra({0: ['x', 'y']}, {},
                        {('x', 'y'): {'y': 1}, ('y', 'x'): {'y': 1}},
                        name='broken_antisymmetry', check=False)


def broken_jacobi():
    return DGLieAlgebra({0: ['x', 'y', 'z']}, {},
                        {('x', 'y'): {'x': 1}, ('x', 'z'): {'x': 1},
                         ('y', 'z'): {'y': 1}},
                        name='broken_jacobi', check=False)


def broken_leibniz():
    return DGLieAlgebra({0: ['x', 'p'], 1: ['q']}, {'p': {'q': 1}},
                        {('x', 'p'): {'p': 1}},
                        name='broken_leibniz', check=False)


@dataclass(frozen=True)
class Fixture:
    name: str
    kind: str
    build: object
    valid: bool = True
    failing_axiom: str = None

    @property
    def description(self):
        doc = (self.build.__doc__ or '').strip().splitlines()
        return doc[0] if doc else self.name.replace('_', ' ')


FIXTURES = {f.name: f for f in [
    Fixture('abelian_two_term', 'dgla', abelian_two_term),
    Fixture('zero_differential', 'dgla', zero_differential),
    Fixture('obstructed_square', 'dgla', obstructed_square),
    Fixture('quantum_type', 'dgla', quantum_type),
    Fixture('contractible_pair', 'morphism', contractible_pair),
    Fixture('nonstrict_linf', 'linf', nonstrict_linf),
    Fixture('nonstrict_gauge_linf', 'linf', nonstrict_gauge_linf),
    Fixture('square_element', 'element', square_element),
    Fixture('broken_d_squared', 'dgla', broken_d_squared, False,
            'd_squared'),
    Fixture('broken_antisymmetry', 'dgla', broken_antisymmetry, False,
            'antisymmetry'),
    Fixture('broken_jacobi', 'dgla', broken_jacobi, False, 'jacobi'),
    Fixture('broken_leibniz', 'dgla', broken_leibniz, False, 'leibniz'),
]}


def list_fixtures():
    """Names of the bundled examples, sorted."""
    return sorted(FIXTURES)


def _lookup(name):
    try:
        return FIXTURES[name]
    except KeyError:
        raise FormatError("unknown example {!r}; available: {}".format(
            name, ', '.join(list_fixtures())))


def get_fixture(name):
    """Build the bundled example ``name``."""
    return _lookup(name).build()


def fixture_payload(name):
    """JSON data of the bundled example ``name``."""
    fixture = _lookup(name)
    obj = fixture.build()
    if fixture.kind == 'dgla':
        return io.algebra_to_dict(obj)
    if fixture.kind == 'morphism':
        return io.morphism_to_dict(obj)
    if fixture.kind == 'linf':
        return io.linf_to_dict(obj)
    data = io.element_to_dict(obj)
    data['algebra'] = io.algebra_to_dict(obj.ambient.base)
    return data


def emit_fixture(name, directory):
    """Write ``<name>.json`` into ``directory`` and return its path."""
    path = Path(directory) / '{}.json'.format(name)
    path.parent.mkdir(parents=True, exist_ok=True)
    io.write_json(fixture_payload(name), path)
    return path
