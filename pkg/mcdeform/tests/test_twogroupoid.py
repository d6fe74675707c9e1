import pytest

from mcdeform.core import TruncationContext
from mcdeform.dgla import (DGLAMorphism, current_algebra,
                           heisenberg_lie_algebra, square_zero_extension,
                           tensor_with_m)
from mcdeform.exceptions import PreconditionError
from mcdeform.fixtures import get_fixture
from mcdeform.gauge import GaugeElement, MCElement, ad_exp, twisted
from mcdeform.samples import (check_random_state, random_gauge, random_mc,
                              random_quasi_iso_pair)
from mcdeform.twogroupoid import (GaugeArrow, build_deligne_crossed,
                                  check_crossed_axioms,
                                  check_two_groupoid_axioms,
                                  crossed_check_report, pi0_evidence,
                                  pi1_reduced, pi2, pi2_transport_report,
                                  reconstruction_report, weak_equiv_evidence)

from .strategies import ambient_of


def _cells_in_minus_one():
    """Heisenberg currents over ``Q (+) <a, e>``, ``|a| = -1``, ``d = 0``."""
    dga = square_zero_extension({'a': -1, 'e': 1})
    return current_algebra(heisenberg_lie_algebra(), dga, name='minus_one')


def _sample_data(g, seed, order=2):
    rs = check_random_state(seed)
    ambient = ambient_of(g, order=order)
    samples = [MCElement(ambient.zero(1)), random_mc(ambient, rs)]
    gauges = [random_gauge(ambient, rs) for _ in range(2)]
    return build_deligne_crossed(ambient, samples, gauges, max_cells=2)


@pytest.mark.parametrize('seed', [0, 1, 2])
def test_deligne_crossed_checks(quantum, seed):
    data = _sample_data(quantum, seed)
    assert data.report.ok
    assert crossed_check_report(data).ok


@pytest.mark.parametrize('seed', [3, 4])
def test_crossed_checks_with_cells(seed):
    data = _sample_data(_cells_in_minus_one(), seed)
    crossed = data.crossed
    assert any(crossed.cells(x) for x in crossed.objects())
    assert check_crossed_axioms(crossed, max_cells=2).ok
    assert check_two_groupoid_axioms(data.two_groupoid).ok
    assert reconstruction_report(crossed, max_cells=2).ok


def test_vertical_composition():
    data = _sample_data(_cells_in_minus_one(), 5, order=1)
    crossed = data.crossed
    two = data.two_groupoid
    x = crossed.objects()[0]
    f = crossed.identity(x)
    a = crossed.cells(x)[0]

    cell = two.cell(f, a)
    assert crossed.arrows_equal(cell.target,
                                crossed.compose(crossed.feedback(a), f))
    loop = two.vertical(two.vertical_inverse(cell), cell)
    assert two.equal(loop, two.identity_cell(f))


def test_make_checks_target():
    ambient = ambient_of(_cells_in_minus_one())
    zero = MCElement(ambient.zero(1))
    data = build_deligne_crossed(ambient, [zero])
    crossed = data.crossed
    two = data.two_groupoid
    f = crossed.identity(zero)
    a = crossed.cells(zero)[0]
    # d_0 vanishes on degree -1, so D(a) is an identity
    assert two.make(f, f, a).cell == a
    moved = GaugeArrow(zero, GaugeElement(
        ambient.element(0, {('x', (1,)): 1})))
    with pytest.raises(PreconditionError):
        two.make(f, moved, a)


_MINUS_ONE_ALGEBRAS = {
    'quantum': lambda: get_fixture('quantum_type'),
    'cells': _cells_in_minus_one,
}


@pytest.mark.parametrize('seed', range(12))
@pytest.mark.parametrize('algebra', sorted(_MINUS_ONE_ALGEBRAS))
def test_pi2_is_twisted_h_minus_one(algebra, seed):
    g = _MINUS_ONE_ALGEBRAS[algebra]()
    ambient = ambient_of(g, num_params=1 + seed % 2, order=2)
    omega = random_mc(ambient, seed)
    group = pi2(omega)
    assert group.report.ok
    assert group.dimension == twisted(omega).cohomology(-1).dimension


@pytest.mark.parametrize('seed', range(4))
def test_twist_moves_cells_by_adjoint(seed):
    rs = check_random_state(seed)
    ambient = ambient_of(_cells_in_minus_one(), order=2)
    omega = random_mc(ambient, rs)
    g = random_gauge(ambient, rs)
    crossed = build_deligne_crossed(ambient, [omega], [g]).crossed
    f = GaugeArrow(omega, g)
    for a in crossed.cells(omega):
        moved = crossed.twist(f, a)
        assert moved.omega == f.target
        assert moved.representative == crossed.algebra(f.target).canonical(
            ad_exp(g, a.representative))
    assert pi2_transport_report(g, omega).ok


def test_pi2_with_cells():
    ambient = ambient_of(_cells_in_minus_one())
    zero = MCElement(ambient.zero(1))
    group = pi2(zero)
    assert group.dimension == 3
    assert group.report.ok
    g = GaugeElement(ambient.element(0, {('x', (1,)): 1}))
    assert pi2_transport_report(g, zero).ok


def test_pi1_reduced(zero_diff):
    ambient = ambient_of(zero_diff)
    omega = random_mc(ambient, 9)
    assert pi1_reduced(omega).dimension == \
        twisted(omega).cohomology(0).dimension


def test_pi0_abelian(abelian):
    ambient = ambient_of(abelian, order=2)
    samples = [ambient.zero(1), ambient.element(1, {('v', (1,)): 1}),
               ambient.element(1, {('v', (2,)): -3})]
    evidence = pi0_evidence(samples)
    assert evidence.classes == [[0, 1, 2]]
    assert evidence.obstructed == evidence.inconclusive == []


def test_pi0_zero_differential(zero_diff):
    ambient = ambient_of(zero_diff)
    samples = [ambient.zero(1), ambient.element(1, {('x*e', (1,)): 1}),
               ambient.zero(1)]
    evidence = pi0_evidence(samples)
    assert evidence.classes == [[0, 2], [1]]
    assert evidence.obstructed == [(0, 1, 1), (1, 2, 1)]
    assert set(evidence.to_dict()) == {'classes', 'obstructed',
                                       'inconclusive'}


def test_weak_equivalence_evidence(pair):
    context = TruncationContext(1, 2)
    source = tensor_with_m(pair.source, context)
    target = tensor_with_m(pair.target, context)
    samples = [random_mc(source, s) for s in (10, 11)]
    targets = [random_mc(target, s) for s in (12, 13)]
    report = weak_equiv_evidence(pair, samples, targets)
    assert report.ok
    assert {'pi2', 'pi1', 'pi0_injective', 'pi0_surjective'} <= \
        {c.name for c in report.checks}


def test_weak_equivalence_random_pair():
    phi = random_quasi_iso_pair(14)
    source = tensor_with_m(phi.source, TruncationContext(1, 1))
    assert weak_equiv_evidence(phi, [random_mc(source, 15)]).ok


def test_weak_equivalence_needs_quasi_iso(zero_diff):
    ambient = ambient_of(zero_diff)
    with pytest.raises(PreconditionError):
        weak_equiv_evidence(DGLAMorphism(zero_diff, zero_diff, {}),
                            [ambient.zero(1)])
