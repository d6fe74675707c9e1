import pytest
from hypothesis import given
import hypothesis.strategies as st

from mcdeform.core import TruncationContext
from mcdeform.deligne import (Connected, Inconclusive, ObstructedAtOrder,
                              ReducedHomWitness, connect_greedy,
                              connect_one_order, is_stabilizing, lift_gauge,
                              lift_mc, lift_mc_one_order, o1, o2, push_class,
                              reduced_equal, stabilizer_exp, transfer_mc,
                              twisted_quasi_iso_report)
from mcdeform.dgla import DGLAMorphism, tensor_with_m
from mcdeform.exceptions import (NotMaurerCartanError, ObstructionError,
                                 PreconditionError)
from mcdeform.fixtures import get_fixture
from mcdeform.gauge import (GaugeElement, MCElement, af_action, curvature,
                            twisted)
from mcdeform.samples import (check_random_state, random_abelian_dgla,
                              random_element, random_gauge, random_mc,
                              random_quasi_iso_pair)

from .strategies import ambient_of, ambients, rationals, seeds


ABELIAN = get_fixture('abelian_two_term')
SQUARE = get_fixture('obstructed_square')


@given(rationals)
def test_square_obstruction(c):
    ambient = ambient_of(SQUARE, order=2)
    omega = ambient.element(1, {('v', (1,)): c})
    cls = o2(omega, omega, 2)
    assert cls.level == 'o2'
    assert cls.degree == 2
    assert cls.coordinates == {(2,): (c * c,)}
    assert bool(cls) == (c != 0)

    if c:
        with pytest.raises(ObstructionError) as excinfo:
            lift_mc(omega, 1, 2)
        assert excinfo.value.obstruction == cls
        assert lift_mc_one_order(omega, 2) is None
    else:
        assert lift_mc(omega, 1, 2) == ambient.zero(1)


def test_obstruction_format_and_dict():
    ambient = ambient_of(SQUARE, order=2)
    omega = ambient.element(1, {('v', (1,)): 1})
    cls = o2(omega, omega, 2)
    assert 'w' in cls.format()
    data = cls.to_dict()
    assert data['level'] == 'o2'
    assert data['order'] == 2
    assert not data['zero']
    assert data['classes'] == [{'monomial': [2], 'coordinates': ['1']}]


def test_o2_requires_mc_below():
    ambient = ambient_of(SQUARE, order=3)
    omega = ambient.element(1, {('v', (1,)): 1})
    with pytest.raises(NotMaurerCartanError):
        o2(omega, omega, 3)
    with pytest.raises(PreconditionError):
        o2(omega, omega, 4)


@given(ambients(max_order=3), st.integers(2, 3))
def test_lift_iff_o2_vanishes(sample, order):
    ambient, rs = sample
    if ambient.order < order:
        return
    lower = ambient.at_order(order - 1)
    omega = ambient.embed(random_mc(lower, rs).value) + \
        random_element(ambient, 1, rs).layer(order)
    lifted = lift_mc_one_order(omega, order)
    assert (lifted is None) == bool(o2(omega, omega, order))
    if lifted is not None:
        assert curvature(ambient.reduce(lifted, order)).is_zero()
        assert lifted.truncate(order - 1) == omega.truncate(order - 1)


@given(ambients())
def test_connect_iff_o1_vanishes(sample):
    ambient, rs = sample
    first = ambient.at_order(1)
    omega, omega2 = random_mc(first, rs), random_mc(first, rs)
    g = connect_one_order(omega, omega2, 1)
    assert (g is None) == bool(o1(omega, omega2, 1))
    if g is not None:
        assert af_action(g, omega) == omega2


@given(ambients())
def test_lift_mc_through_orders(sample):
    ambient, rs = sample
    omega = random_mc(ambient, rs)
    assert lift_mc(omega, ambient.order) == omega
    try:
        lifted = lift_mc(omega, 1)
    except ObstructionError as e:
        assert e.obstruction
    else:
        assert lifted.reduce(1) == omega.reduce(1)


@given(rationals, rationals)
def test_connect_abelian(a, c):
    ambient = ambient_of(ABELIAN, order=2)
    omega = MCElement(ambient.element(1, {('v', (1,)): c}))
    omega2 = MCElement(ambient.element(1, {('v', (1,)): c - a}))
    result = connect_greedy(omega, omega2)
    assert isinstance(result, Connected)
    assert result.witness.log == ambient.element(0, {('u', (1,)): a})


def test_connect_obstructed_first_order(zero_diff):
    ambient = ambient_of(zero_diff)
    omega = ambient.element(1, {('x*e', (1,)): 1})
    result = connect_greedy(ambient.zero(1), omega)
    assert isinstance(result, ObstructedAtOrder)
    assert result.order == 1
    assert result.obstruction.level == 'o1'


@given(seeds, st.integers(1, 3))
def test_abelian_oracle(seed, order):
    rs = check_random_state(seed)
    ambient = tensor_with_m(random_abelian_dgla(rs), TruncationContext(1,
                                                                       order))
    omega, omega2 = random_mc(ambient, rs), random_mc(ambient, rs)
    result = connect_greedy(omega, omega2)
    assert not isinstance(result, Inconclusive)
    exact = twisted(ambient.zero(1)).is_exact(omega.value - omega2.value)
    assert isinstance(result, Connected) == exact


def test_reduced_equal(quantum):
    ambient = ambient_of(quantum)
    zero = MCElement(ambient.zero(1))
    identity = GaugeElement.identity(ambient)
    # exp(d kappa) for kappa of degree -1 is trivial in the reduced group
    exact = GaugeElement(ambient.element(0, {('x*b', (1,)): 1}))
    closed = GaugeElement(ambient.element(0, {('x', (1,)): 1}))
    assert reduced_equal(exact, identity, zero)
    assert not reduced_equal(closed, identity, zero)

    witness = ReducedHomWitness.from_gauge(zero, closed)
    assert witness.target == zero
    assert witness.same_class(closed * exact)
    assert not witness.same_class(identity)


def test_reduced_equal_needs_same_target(abelian):
    ambient = ambient_of(abelian)
    g = GaugeElement(ambient.element(0, {('u', (1,)): 1}))
    with pytest.raises(PreconditionError):
        reduced_equal(g, GaugeElement.identity(ambient), ambient.zero(1))


def test_stabilizer_abelian(abelian):
    ambient = ambient_of(abelian, order=2)
    assert stabilizer_exp(ambient.zero(1)).dimension == 0


def test_stabilizer_zero_differential(zero_diff):
    ambient = ambient_of(zero_diff)
    stab = stabilizer_exp(ambient.zero(1))
    assert stab.dimension == ambient.dim(0)
    coords = tuple(range(1, stab.dimension + 1))
    g = stab.element(coords)
    assert is_stabilizing(g.log, ambient.zero(1))
    assert stab.class_of(g) == coords


@given(ambients())
def test_stabilizer_elements_stabilize(sample):
    ambient, rs = sample
    omega = random_mc(ambient, rs)
    stab = stabilizer_exp(omega)
    assert stab.dimension == twisted(omega).cohomology(0).dimension
    for kappa in stab.basis:
        assert is_stabilizing(kappa, omega)


def test_transfer_along_identity(zero_diff):
    ambient = ambient_of(zero_diff, num_params=2, order=2)
    _transfer_check(DGLAMorphism.identity(zero_diff), random_mc(ambient, 7))


def _transfer_check(phi, chi):
    result = transfer_mc(phi, chi)
    source = result.omega.ambient
    assert source.base == phi.source
    pushed = source.apply_morphism(phi, result.omega.value, chi.ambient)
    assert af_action(result.gauge, pushed) == chi.value
    return result


def test_transfer_contractible_pair(pair):
    ambient = tensor_with_m(pair.target, TruncationContext(1, 2))
    _transfer_check(pair, random_mc(ambient, 3))


@given(seeds)
def test_transfer_random_pairs(seed):
    rs = check_random_state(seed)
    phi = random_quasi_iso_pair(rs)
    ambient = tensor_with_m(phi.target, TruncationContext(1, 2))
    _transfer_check(phi, random_mc(ambient, rs))


def test_transfer_requires_quasi_iso(zero_diff):
    ambient = ambient_of(zero_diff)
    with pytest.raises(PreconditionError):
        transfer_mc(DGLAMorphism(zero_diff, zero_diff, {}), ambient.zero(1))


@given(seeds)
def test_lift_gauge(seed):
    rs = check_random_state(seed)
    phi = random_quasi_iso_pair(rs)
    context = TruncationContext(1, 2)
    source = tensor_with_m(phi.source, context)
    target = tensor_with_m(phi.target, context)
    omega = random_mc(source, rs)
    g0 = random_gauge(source, rs)
    omega2 = af_action(g0, omega)
    chi = MCElement(source.apply_morphism(phi, omega.value, target))
    h = g0.apply_morphism(phi, target)
    for kappa in stabilizer_exp(chi).basis:
        h = h * GaugeElement(kappa)

    g = lift_gauge(phi, omega, omega2, h)
    assert af_action(g, omega) == omega2
    assert reduced_equal(g.apply_morphism(phi, target), h, chi)


def test_push_class_and_twisted_report(pair):
    source = tensor_with_m(pair.source, TruncationContext(1, 1))
    omega = random_mc(source, 11)
    assert twisted_quasi_iso_report(pair, omega).ok
    cls = o1(omega, source.zero(1), 1)
    assert bool(push_class(pair, cls)) == bool(cls)
