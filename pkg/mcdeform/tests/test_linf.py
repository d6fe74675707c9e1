import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from mcdeform.core import TruncationContext
from mcdeform.dgla import (DGLieAlgebra, GradedSpace, is_quasi_iso,
                           tensor_with_m)
from mcdeform.exceptions import (AxiomError, ContextMismatchError,
                                 DegreeError, PreconditionError)
from mcdeform.fixtures import FIXTURES, get_fixture
from mcdeform.gauge import (GaugeElement, MCElement, af_action, curvature,
                            path_from_gauge)
from mcdeform.linf import (BarCoderivation, BarElement, LInfMorphism,
                           compose_linf, correct_weight_two, gauge_respect,
                           homotopy_extension, koszul_sort, mc_pushforward,
                           push_path, sym_basis, twisted_linear_part,
                           validate_linf)
from mcdeform.samples import (check_random_state, random_dgla, random_gauge,
                              random_mc, random_nonstrict_linf,
                              random_quasi_iso_pair)

from .strategies import ambient_of, rationals, seeds


NONSTRICT = get_fixture('nonstrict_linf')


def test_koszul_sort():
    space = GradedSpace({0: ['x', 'y'], 1: ['v']})
    # degree 0 vectors are odd in g[1]
    assert koszul_sort(space, (1, 0)) == (-1, (0, 1))
    assert koszul_sort(space, (2, 0)) == (1, (0, 2))
    assert koszul_sort(space, (0, 0))[0] == 0
    assert sym_basis(space, 2) == [(0, 1), (0, 2), (1, 2), (2, 2)]


def test_bar_element_canonical_form():
    g = DGLieAlgebra({0: ['x', 'y']})
    assert BarElement(g, {('y', 'x'): 1}) == BarElement(g, {('x', 'y'): -1})
    assert BarElement(g, {('x', 'x'): 1}).is_zero()
    assert BarElement(g, {('x', 'y'): 1}, weight=1).is_zero()


@pytest.mark.parametrize('name', [n for n, f in FIXTURES.items()
                                  if f.kind == 'dgla' and f.valid])
def test_bar_coderivation_squares_to_zero(name):
    assert BarCoderivation(get_fixture(name), 3).check_square_zero().ok


@pytest.mark.parametrize('name,weight', [
    ('broken_d_squared', 'weight 1'),
    ('broken_jacobi', 'weight 3'),
])
def test_bar_coderivation_detects_broken_axioms(name, weight):
    report = BarCoderivation(get_fixture(name), 3).check_square_zero()
    assert weight in report.failed_names()


@given(seeds)
def test_bar_coderivation_random(seed):
    assert BarCoderivation(random_dgla(seed), 3).check_square_zero().ok


def test_bar_coderivation_needs_dgla():
    with pytest.raises(TypeError):
        BarCoderivation({0: ['x']})


def test_strict_morphism_validates(pair):
    phi = LInfMorphism.from_dgla_morphism(pair, horizon=3)
    assert phi.is_strict
    assert validate_linf(phi).ok
    assert phi.strict_part().matrix(0) == pair.matrix(0)


def test_nonstrict_fixture():
    assert not NONSTRICT.is_strict
    assert NONSTRICT.orders == [1, 2]
    assert validate_linf(NONSTRICT).ok
    assert NONSTRICT.component(2) == {('v', 'v'): {'u': 2}}


def test_perturbed_second_coefficient_fails():
    source, target = NONSTRICT.source, NONSTRICT.target
    first = NONSTRICT.component(1)
    taylor = {1: first, 2: {('v', 'v'): {'u': 3}}}
    phi = LInfMorphism(source, target, taylor, horizon=3, check=False)
    report = validate_linf(phi)
    assert 'weight 1' not in report.failed_names()
    assert 'weight 2' in report.failed_names()
    assert report.first_failure().witness == ('v', 'v')
    with pytest.raises(AxiomError):
        LInfMorphism(source, target, taylor, horizon=3)


def test_taylor_input_errors():
    source, target = NONSTRICT.source, NONSTRICT.target
    with pytest.raises(DegreeError):
        LInfMorphism(source, target, {2: {('v', 'v'): {'w': 1}}},
                     check=False)
    with pytest.raises(PreconditionError):
        LInfMorphism(source, target, {2: {('v', 'v'): {'u': 2}}},
                     horizon=1, check=False)
    with pytest.raises(PreconditionError):
        validate_linf(NONSTRICT, NONSTRICT.horizon + 1)


@given(rationals)
def test_pushforward_absorbs_bracket_defect(a):
    ambient = ambient_of(NONSTRICT.source, order=2)
    omega = MCElement(ambient.element(1, {('v', (1,)): a,
                                          ('y', (2,)): -a * a}))
    pushed = mc_pushforward(NONSTRICT, omega)
    target = pushed.ambient
    expected = target.element(1, {('v', (1,)): a, ('y', (2,)): -a * a,
                                  ('u', (2,)): a * a})
    assert pushed == expected


@given(rationals)
def test_twisted_linear_part(a):
    ambient = ambient_of(NONSTRICT.source, order=2)
    omega = ambient.element(1, {('v', (1,)): a, ('y', (2,)): -a * a})
    x = ambient.element(1, {('v', (1,)): 1})
    linear = twisted_linear_part(NONSTRICT, omega, x)
    expected = linear.ambient.element(1, {('v', (1,)): 1,
                                          ('u', (2,)): 2 * a})
    assert linear == expected


def test_pushforward_needs_horizon():
    phi = LInfMorphism(NONSTRICT.source, NONSTRICT.target,
                       NONSTRICT.taylor, horizon=2)
    ambient = ambient_of(NONSTRICT.source, order=3)
    with pytest.raises(PreconditionError):
        mc_pushforward(phi, ambient.zero(1))


def test_pushforward_checks_source(abelian):
    with pytest.raises(ContextMismatchError):
        mc_pushforward(NONSTRICT, ambient_of(abelian).zero(1))


def test_correct_weight_two():
    source, target = NONSTRICT.source, NONSTRICT.target
    first = {x: {x: 1} for x in source.space.names}
    phi = correct_weight_two(source, target, first)
    assert phi is not None
    assert phi.horizon == 2
    assert validate_linf(phi).ok
    assert phi.component(1) == NONSTRICT.component(1)
    assert phi.component(2)


def test_correct_weight_two_impossible(square):
    target = DGLieAlgebra({1: ['v'], 2: ['w']})
    assert correct_weight_two(square, target,
                              {'v': {'v': 1}, 'w': {'w': 1}}) is None


@given(seeds)
def test_compose_with_identity(seed):
    phi = LInfMorphism.from_dgla_morphism(random_quasi_iso_pair(seed), 2)
    left = LInfMorphism.identity(phi.source, 2)
    right = LInfMorphism.identity(phi.target, 2)
    assert compose_linf(phi, right) == phi
    assert compose_linf(left, phi) == phi


def test_compose_nonstrict_with_identity():
    right = LInfMorphism.identity(NONSTRICT.target, NONSTRICT.horizon)
    composite = compose_linf(NONSTRICT, right)
    assert composite == NONSTRICT
    assert validate_linf(composite).ok


def test_compose_requires_matching_algebras(pair):
    phi = LInfMorphism.from_dgla_morphism(pair)
    with pytest.raises(ContextMismatchError):
        compose_linf(phi, phi)


@given(seeds)
def test_push_path_and_gauge_respect(seed):
    rs = check_random_state(seed)
    phi = LInfMorphism.from_dgla_morphism(random_quasi_iso_pair(rs), 2)
    ambient = tensor_with_m(phi.source, TruncationContext(1, 2))
    omega = random_mc(ambient, rs)
    g = random_gauge(ambient, rs)

    pushed = push_path(phi, path_from_gauge(g, omega))
    assert pushed.check()
    assert pushed.start == mc_pushforward(phi, omega)

    h = gauge_respect(phi, omega, g)
    assert af_action(h, mc_pushforward(phi, omega)) == \
        mc_pushforward(phi, af_action(g, omega))


def test_gauge_respect_identity(zero_diff):
    phi = LInfMorphism.identity(zero_diff, 2)
    ambient = tensor_with_m(zero_diff, TruncationContext(2, 2))
    omega = random_mc(ambient, 21)
    g = random_gauge(ambient, 22)
    h = gauge_respect(phi, omega, g)
    assert h.log == g.log


GAUGE_NONSTRICT = get_fixture('nonstrict_gauge_linf')


def test_nonstrict_gauge_fixture():
    phi = GAUGE_NONSTRICT
    assert phi.orders == [1, 2, 3]
    assert validate_linf(phi).ok
    assert phi.component(2) == {('x', 'y*a'): {'cm1': 1},
                                ('x', 'y*b'): {'dcm1': -1}}
    assert is_quasi_iso(phi.strict_part()).ok


def test_homotopy_extension_edge_cases():
    source = GAUGE_NONSTRICT.source
    phi = homotopy_extension(source, {})
    assert phi.is_strict
    assert phi.target == source
    with pytest.raises(DegreeError):
        homotopy_extension(source, {('x', 'x'): 1})
    # a second extension avoids the names of the first
    twice = homotopy_extension(GAUGE_NONSTRICT.target, {('x', 'y*b'): 1})
    assert 'ccm1' in twice.target.space.names


@settings(max_examples=60)
@given(seeds)
def test_gauge_respect_nonstrict(seed):
    rs = check_random_state(seed)
    phi = GAUGE_NONSTRICT
    ambient = ambient_of(phi.source, num_params=2, order=3)
    omega = random_mc(ambient, rs)
    g = random_gauge(ambient, rs)
    h = gauge_respect(phi, omega, g)
    assert af_action(h, mc_pushforward(phi, omega)) == \
        mc_pushforward(phi, af_action(g, omega))


def test_gauge_respect_sees_higher_coefficients():
    phi = GAUGE_NONSTRICT
    ambient = ambient_of(phi.source, order=2)
    omega = MCElement(ambient.element(1, {('y*b', (1,)): 1}))
    g = GaugeElement(ambient.element(0, {('x', (1,)): 1}))
    h = gauge_respect(phi, omega, g)
    # phi_2(y*b, x) = -dcm1 enters the witness at order two
    assert h.log == h.ambient.element(0, {('x', (1,)): 1,
                                          ('dcm1', (2,)): -1})
    assert af_action(h, mc_pushforward(phi, omega)) == \
        mc_pushforward(phi, af_action(g, omega))


@settings(max_examples=20)
@given(seeds)
def test_random_nonstrict_validates(seed):
    phi = random_nonstrict_linf(seed)
    assert not phi.is_strict
    assert validate_linf(phi).ok
    assert is_quasi_iso(phi.strict_part()).ok


@settings(max_examples=100)
@given(seeds, st.integers(1, 2), st.integers(1, 3))
def test_nonstrict_pushforward_is_mc(seed, num_params, order):
    rs = check_random_state(seed)
    phi = random_nonstrict_linf(rs)
    ambient = ambient_of(phi.source, num_params, order)
    omega = random_mc(ambient, rs)
    pushed = mc_pushforward(phi, omega)
    assert pushed.ambient.base == phi.target
    assert curvature(pushed.value).is_zero()


@settings(max_examples=30)
@given(seeds)
def test_pushforward_commutes_with_truncation(seed):
    rs = check_random_state(seed)
    phi = random_nonstrict_linf(rs)
    ambient = ambient_of(phi.source, order=3)
    omega = random_mc(ambient, rs)
    pushed = mc_pushforward(phi, omega)
    for j in (1, 2):
        low = mc_pushforward(phi, omega.reduce(j))
        assert low == pushed.reduce(j)


def _chain(rs, length):
    phis = [random_nonstrict_linf(rs)]
    while len(phis) < length:
        phis.append(random_nonstrict_linf(rs, source=phis[-1].target,
                                          density=0.1, max_weight=1))
    return phis


@settings(max_examples=25)
@given(seeds)
def test_pushforward_respects_composition(seed):
    rs = check_random_state(seed)
    phi, xi = _chain(rs, 2)
    composite = compose_linf(phi, xi, weight=2)
    ambient = ambient_of(phi.source, num_params=2, order=2)
    omega = random_mc(ambient, rs)
    assert mc_pushforward(composite, omega) == \
        mc_pushforward(xi, mc_pushforward(phi, omega))


@settings(max_examples=10)
@given(seeds)
def test_composition_is_associative(seed):
    phi, xi, psi = _chain(check_random_state(seed), 3)
    left = compose_linf(compose_linf(phi, xi), psi)
    right = compose_linf(phi, compose_linf(xi, psi))
    assert left == right
    assert validate_linf(left).ok
