from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from mcdeform.core import (Cohomology, QMatrix, QSubspace, SeriesElement,
                           TPoly, TruncationContext, as_rational,
                           bernoulli_number, format_rational, image_basis,
                           in_span, interpolate, inverse_factorial,
                           kernel_basis, parse_rational, poly_integrate, rank,
                           rref, series_mul, solve)
from mcdeform.exceptions import (ContextMismatchError, DegreeError,
                                 DimensionError, FormatError)

from .strategies import matrices, rationals, series


@pytest.mark.parametrize('text,expected', [
    ('3', Fraction(3)),
    ('-3/6', Fraction(-1, 2)),
    (' 4 / 2 ', Fraction(2)),
])
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize('text', ['1.5', '1e3', '1/0', '', 'a/b', '1//2'])
def test_parse_rational_rejects(text):
    with pytest.raises(FormatError):
        parse_rational(text)


def test_format_rational():
    assert format_rational(Fraction(4, 2)) == '2'
    assert format_rational(Fraction(-2, 6)) == '-1/3'


def test_as_rational_rejects_floats():
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        as_rational(True)


def test_bernoulli_numbers():
    assert bernoulli_number(0) == 1
    assert bernoulli_number(1) == Fraction(-1, 2)
    assert bernoulli_number(2) == Fraction(1, 6)
    assert bernoulli_number(3) == 0
    assert bernoulli_number(4) == Fraction(-1, 30)
    assert inverse_factorial(4) == Fraction(1, 24)


def test_rref_identity():
    reduced, pivots = rref(QMatrix.identity(2))
    assert reduced == QMatrix.identity(2)
    assert pivots == (0, 1)


def test_rref_rank_one():
    reduced, pivots = rref(QMatrix([[1, 2], [2, 4]]))
    assert reduced == QMatrix([[1, 2], [0, 0]])
    assert pivots == (0,)


@given(matrices())
def test_kernel_and_image(m):
    kernel = kernel_basis(m)
    for v in kernel:
        assert not any(m.apply(v))
    assert rank(m) == len(rref(m)[1]) == len(image_basis(m))
    assert len(kernel) + rank(m) == m.cols


def test_kernel_of_zero_map():
    assert len(kernel_basis(QMatrix.zeros(3, 3))) == 3


@given(st.lists(rationals, min_size=3, max_size=3))
def test_solve_identity(b):
    assert solve(QMatrix.identity(3), b) == tuple(b)


def test_solve_inconsistent():
    assert solve(QMatrix([[1, 0], [0, 0]]), [0, 1]) is None


def test_solve_dimension_mismatch():
    with pytest.raises(DimensionError):
        solve(QMatrix.identity(2), [1])


@given(matrices(), st.data())
def test_in_span(m, data):
    x = data.draw(st.lists(rationals, min_size=m.cols, max_size=m.cols))
    basis = image_basis(m)
    assert in_span(m.apply(x), basis)

    units = [tuple(Fraction(int(i == k)) for i in range(m.rows))
             for k in range(m.rows)]
    off = [e for e in units if not in_span(e, basis)]
    assert bool(off) == (rank(m) < m.rows)


def test_subspace_reduce():
    sub = QSubspace([(1, 1, 0)], 3)
    assert sub.dim == 1
    assert sub.reduce((2, 3, 5)) == (0, 1, 5)
    assert (3, 3, 0) in sub
    assert sub.complement_positions() == [1, 2]


def test_inverse():
    m = QMatrix([[2, 1], [1, 1]])
    assert m @ m.inverse() == QMatrix.identity(2)
    with pytest.raises(ZeroDivisionError):
        QMatrix([[1, 2], [2, 4]]).inverse()


def test_cohomology_three_term():
    # Q -> Q^3 -> Q, d_in = e_0, d_out = projection on e_1
    h = Cohomology(QMatrix([[1], [0], [0]]), QMatrix([[0, 1, 0]]), 3)
    assert h.dimension == 1
    assert h.representatives == [(0, 0, 1)]
    assert h.class_coordinates((1, 0, 5)) == (5,)
    assert h.is_coboundary((2, 0, 0))
    assert not h.is_coboundary((0, 0, 1))


def test_monomial_order():
    ctx = TruncationContext(2, 2)
    assert ctx.monomials == ((1, 0), (0, 1), (2, 0), (1, 1), (0, 2))
    assert ctx.dim == 5


def test_context_rejects_bad_monomials():
    ctx = TruncationContext(1, 2)
    with pytest.raises(DegreeError):
        ctx.check_monomial((3,))
    with pytest.raises(DegreeError):
        ctx.check_monomial((0,))
    with pytest.raises(FormatError):
        ctx.check_monomial((1, 0))


def test_series_truncation():
    h1 = TruncationContext(1, 1).param(0)
    assert series_mul(h1, h1).is_zero()

    ctx = TruncationContext(1, 2)
    h = ctx.param(0)
    assert series_mul(h, h) == SeriesElement(ctx, {(2,): 1})

    one = ctx.one()
    assert (one + h) * (one - h + h * h) == 1


def test_series_context_mismatch():
    with pytest.raises(ContextMismatchError):
        series_mul(TruncationContext(1, 1).param(0),
                   TruncationContext(1, 2).param(0))


CONTEXT = TruncationContext(2, 3)


@given(series(CONTEXT), series(CONTEXT), series(CONTEXT))
def test_series_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(series(CONTEXT), series(CONTEXT))
def test_truncation_is_multiplicative(a, b):
    assert (a * b).truncate(2) == a.truncate(2) * b.truncate(2)


@given(series(CONTEXT))
def test_series_inverse(a):
    if not a.constant_term:
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == 1


@pytest.mark.parametrize('coeffs,expected', [
    ([], []),
    ([1], [0, 1]),
    ([0, 0, 3], [0, 0, 0, 1]),
])
def test_poly_integrate(coeffs, expected):
    assert poly_integrate(coeffs) == TPoly(expected)


@given(st.lists(rationals, max_size=5))
def test_integrate_then_differentiate(coeffs):
    p = TPoly(coeffs)
    assert poly_integrate(p).derivative() == p
    assert poly_integrate(p).evaluate(0) == 0


def test_interpolate():
    p = interpolate([0, 1, 2], [1, 3, 7])
    assert p == TPoly([1, 1, 1])
    with pytest.raises(ValueError):
        interpolate([0, 0], [1, 1])
