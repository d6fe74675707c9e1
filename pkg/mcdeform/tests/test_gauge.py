from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from mcdeform.core import TPoly
from mcdeform.dgla import contractible_unit, current_algebra, sl2_lie_algebra
from mcdeform.exceptions import (ContextMismatchError, DegreeError,
                                 NotMaurerCartanError, PreconditionError)
from mcdeform.fixtures import get_fixture
from mcdeform.gauge import (GaugeElement, MCElement, MCPath, ad_exp,
                            af_action, bch, curvature, integrate_mc_path,
                            is_maurer_cartan, path_from_gauge, twisted)
from mcdeform.samples import random_element

from .strategies import ambient_of, gauge_samples, rationals


ABELIAN = get_fixture('abelian_two_term')


def test_curvature_of_zero(abelian):
    ambient = ambient_of(abelian)
    assert curvature(ambient.zero(1)).is_zero()
    with pytest.raises(DegreeError):
        curvature(ambient.zero(0))


@given(rationals)
def test_abelian_curvature_is_differential(c):
    ambient = ambient_of(ABELIAN)
    omega = ambient.element(1, {('v', (1,)): c})
    assert curvature(omega) == ambient.d(omega)
    assert is_maurer_cartan(omega)


def test_square_curvature(square):
    ambient = ambient_of(square, order=2)
    omega = ambient.element(1, {('v', (1,)): 3})
    assert curvature(omega) == ambient.element(2, {('w', (2,)): 9})
    with pytest.raises(NotMaurerCartanError):
        MCElement(omega)
    # fine to first order
    MCElement(ambient.reduce(omega, 1))


def test_bch_sl2():
    ambient = ambient_of(sl2_lie_algebra(), order=2)
    e = ambient.element(0, {('e', (1,)): 1})
    f = ambient.element(0, {('f', (1,)): 1})
    h2 = ambient.element(0, {('h', (2,)): 1})
    assert bch(e, f) == e + f + h2 * Fraction(1, 2)
    assert bch(e, -e).is_zero()


def test_bch_degree_and_context(abelian):
    ambient = ambient_of(abelian)
    with pytest.raises(DegreeError):
        bch(ambient.zero(1), ambient.zero(1))
    with pytest.raises(ContextMismatchError):
        bch(ambient.zero(0), ambient_of(abelian, order=2).zero(0))


@given(gauge_samples(gauges=3))
def test_gauge_group(sample):
    ambient, _, g1, g2, g3 = sample
    one = GaugeElement.identity(ambient)
    assert g1 * one == g1 == one * g1
    assert (g1 * g2) * g3 == g1 * (g2 * g3)
    assert (g1 * g1.inverse()).is_identity()


@given(gauge_samples(gauges=2))
def test_conjugation(sample):
    ambient, _, g, h = sample
    conj = g * h * g.inverse()
    assert conj.log == ad_exp(g, h.log)


@given(gauge_samples())
def test_identity_acts_trivially(sample):
    ambient, omega, _ = sample
    assert af_action(GaugeElement.identity(ambient), omega) == omega


@given(rationals, rationals)
def test_abelian_action(a, c):
    ambient = ambient_of(ABELIAN)
    omega = MCElement(ambient.element(1, {('v', (1,)): c}))
    g = GaugeElement(ambient.element(0, {('u', (1,)): a}))
    assert af_action(g, omega) == ambient.element(1, {('v', (1,)): c - a})


@settings(max_examples=200)
@given(gauge_samples())
def test_action_preserves_mc(sample):
    _, omega, g = sample
    moved = af_action(g, omega)
    assert isinstance(moved, MCElement)
    assert is_maurer_cartan(moved.value)


@given(gauge_samples(gauges=2))
def test_action_group_law(sample):
    _, omega, g1, g2 = sample
    assert af_action(g1 * g2, omega) == af_action(g1, af_action(g2, omega))


@given(gauge_samples(), st.integers(0, 2 ** 16))
def test_action_on_non_mc_elements(sample, seed):
    ambient, _, g = sample
    x = random_element(ambient, 1, seed)
    back = af_action(g.inverse(), af_action(g, x))
    assert back == x


@given(gauge_samples())
def test_twisted_square_zero(sample):
    _, omega, _ = sample
    assert twisted(omega).check_square_zero()


def test_twisted_by_zero(abelian):
    ambient = ambient_of(abelian, order=2)
    complex_ = twisted(ambient.zero(1))
    assert complex_.matrix(0) == ambient.linear_map_matrix(ambient.d, 0, 1)


@given(gauge_samples(), st.integers(0, 2 ** 16))
def test_twisted_intertwining(sample, seed):
    ambient, omega, g = sample
    moved = af_action(g, omega)
    x = random_element(ambient, 0, seed)
    assert ad_exp(g, twisted(omega).apply(x)) == \
        twisted(moved).apply(ad_exp(g, x))


def test_path_from_zero_gauge(abelian):
    ambient = ambient_of(abelian)
    omega = MCElement(ambient.element(1, {('v', (1,)): 2}))
    path = path_from_gauge(ambient.zero(0), omega)
    assert path.form_part.is_zero()
    assert path.one_part == TPoly([omega.value], ambient.zero(1))
    assert path.start == path.end == omega


@given(rationals, rationals, rationals)
def test_abelian_path(a, b, c):
    ambient = ambient_of(ABELIAN, order=2)
    omega = MCElement(ambient.element(1, {('v', (1,)): c}))
    gamma = ambient.element(0, {('u', (1,)): a, ('u', (2,)): b})
    path = path_from_gauge(gamma, omega)
    assert path.one_part == TPoly([omega.value, -ambient.d(gamma)],
                                  ambient.zero(1))
    assert path.form_part == TPoly([-gamma], ambient.zero(0))
    assert path.end == af_action(GaugeElement(gamma), omega)


@pytest.mark.parametrize('seed', range(8))
def test_path_with_non_closed_gauge(seed):
    # degree 0 part x*a with d(x*a) = x*b, so d gamma does not vanish
    g = current_algebra(sl2_lie_algebra(), contractible_unit(0))
    ambient = ambient_of(g, num_params=2, order=3)
    omega = MCElement(random_element(ambient, 1, seed))
    gamma = random_element(ambient, 0, seed + 100)
    path = path_from_gauge(gamma, omega)

    first = ambient.bracket(gamma, omega.value) - ambient.d(gamma)
    assert path.one_part.coefficient(1) == first
    assert path.one_part.coefficient(2) == \
        ambient.bracket(gamma, first) * Fraction(1, 2)
    assert path.check()
    assert path.end == af_action(GaugeElement(gamma), omega)
    assert integrate_mc_path(path).log == gamma


@given(gauge_samples(), st.fractions(0, 1, max_denominator=4))
def test_path_from_gauge(sample, t):
    ambient, omega, g = sample
    path = path_from_gauge(g, omega)
    assert path.check()
    assert path.start == omega
    assert path.end == af_action(g, omega)
    assert is_maurer_cartan(path.evaluate(t).value)


@given(gauge_samples())
def test_integrate_recovers_gauge(sample):
    _, omega, g = sample
    h = integrate_mc_path(path_from_gauge(g, omega))
    assert h.log == g.log


def test_path_invariant_is_checked(abelian):
    ambient = ambient_of(abelian)
    omega = ambient.element(1, {('v', (1,)): 1})
    gamma = ambient.element(0, {('u', (1,)): 1})
    # omega^1(t) constant but omega^0 = gamma moves it
    with pytest.raises(PreconditionError):
        MCPath(ambient, [omega], [gamma])
    path = MCPath(ambient, [omega], [gamma], check=False)
    with pytest.raises(PreconditionError):
        integrate_mc_path(path)
