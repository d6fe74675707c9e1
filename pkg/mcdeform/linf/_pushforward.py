import logging
from fractions import Fraction

from ..core import interpolate
from ..dgla import NilElement, tensor_with_m
from ..exceptions import (ContextMismatchError, InvariantViolation,
                          PreconditionError)
from ..gauge import (GaugeElement, MCElement, MCPath, af_action, curvature,
                     integrate_mc_path, path_from_gauge)
from ._bar import _add_to


logger = logging.getLogger(__name__)


def _check_source(phi, x):
    if x.ambient.base != phi.source:
        raise ContextMismatchError("element does not live over the source "
                                   "of the L-infinity morphism")


def _powers(x, max_size):
    """Multisets of terms of ``x`` up to ``max_size`` factors.

    Yields ``(indices, monomial, weight)`` where ``weight`` is the
    product of the coefficients divided by the product of the factorials
    of the multiplicities, so that ``x^n / n!`` is the sum over multisets
    of size ``n``. The empty multiset is included.
    """
    ctx = x.ambient.context
    terms = sorted(x.terms.items())

    def walk(start, indices, mono, weight, last, run):
        yield indices, mono, weight
        if len(indices) == max_size:
            return
        for p in range(start, len(terms)):
            (i, m), c = terms[p]
            new_mono = ctx.multiply(mono, m)
            if new_mono is None:
                continue
            new_run = run + 1 if p == last else 1
            yield from walk(p, indices + (i,), new_mono,
                            weight * c / new_run, p, new_run)

    yield from walk(0, (), ctx.unit, Fraction(1), -1, 0)


def _push_terms(phi, x, target, extra=None):
    """``sum_n 1/n! phi_n(x, ..., x)``, or with ``extra`` the linear term
    ``sum_n 1/(n-1)! phi_n(x, ..., x, extra)``."""
    ctx = x.ambient.context
    out = {}
    if extra is None:
        for indices, mono, weight in _powers(x, phi.horizon):
            if not indices:
                continue
            for k, c in phi.evaluate(indices).items():
                _add_to(out, (k, mono), weight * c)
        return NilElement(target, x.degree, out)

    degree = extra.degree
    for indices, mono, weight in _powers(x, phi.horizon - 1):
        for (i, m), c in extra.terms.items():
            full = ctx.multiply(mono, m)
            if full is None:
                continue
            for k, v in phi.evaluate(indices + (i,)).items():
                _add_to(out, (k, full), weight * c * v)
    return NilElement(target, degree, out)


def _require_horizon(phi, order):
    if phi.horizon < order:
        raise PreconditionError("L-infinity morphism is only known up to "
                                "order {}, truncation order is {}"
                                .format(phi.horizon, order))


def mc_pushforward(phi, omega, target=None):
    """Push a Maurer-Cartan element along an L-infinity morphism.

    ``MC(phi)(omega) = sum_(n >= 1) phi_n(omega, ..., omega) / n!``; the
    sum stops at the truncation order since the ``n``-th term lies in
    ``m^n``.

    Raises
    ------
    PreconditionError
        If the horizon of ``phi`` lies below the truncation order.
    InvariantViolation
        If the result is not Maurer-Cartan.

    """
    omega = MCElement(omega)
    _check_source(phi, omega.value)
    ambient = omega.ambient
    _require_horizon(phi, ambient.order)
    if target is None:
        target = tensor_with_m(phi.target, ambient.context)
    value = _push_terms(phi, omega.value, target)
    if not curvature(value).is_zero():
        raise InvariantViolation("pushforward is not Maurer-Cartan")
    return MCElement(value)


def twisted_linear_part(phi, omega, x, target=None):
    """Linear part ``sum_n phi_n(omega, ..., omega, x) / (n-1)!`` of the
    morphism twisted by ``omega``, applied to ``x``."""
    value = omega.value if isinstance(omega, MCElement) else omega
    _check_source(phi, value)
    value.ambient.check_same(x.ambient)
    if target is None:
        target = tensor_with_m(phi.target, value.ambient.context)
    return _push_terms(phi, value, target, extra=x)


def push_path(phi, path, target=None):
    """Image of a Maurer-Cartan path under ``phi``.

    The pushed path is ``MC(phi)(omega^1(t))`` plus ``dt`` times the
    twisted linear part of ``phi`` at ``omega^1(t)`` applied to
    ``omega^0(t)``. Both are polynomials in ``t`` of known degree and are
    recovered by interpolation through exact evaluations.

    """
    ambient = path.ambient
    _require_horizon(phi, ambient.order)
    if target is None:
        target = tensor_with_m(phi.target, ambient.context)
    order = ambient.order
    d1 = max(path.one_part.degree, 0)
    d0 = max(path.form_part.degree, 0)
    one_degree = order * d1
    form_degree = (order - 1) * d1 + d0

    points = list(range(max(one_degree, form_degree) + 1))
    one_values, form_values = [], []
    for p in points:
        w1 = path.one_part.evaluate(p)
        w0 = path.form_part.evaluate(p)
        one_values.append(_push_terms(phi, w1, target))
        form_values.append(_push_terms(phi, w1, target, extra=w0))

    one = interpolate(points[:one_degree + 1], one_values[:one_degree + 1],
                      target.zero(1))
    form = interpolate(points[:form_degree + 1],
                       form_values[:form_degree + 1], target.zero(0))
    try:
        return MCPath(target, one, form)
    except PreconditionError as exc:
        raise InvariantViolation("pushed path is not a Maurer-Cartan "
                                 "path") from exc


def gauge_respect(phi, omega, gamma):
    """Gauge element relating the pushforwards of gauge equivalent MC
    elements.

    Parameters
    ----------
    phi : LInfMorphism
    omega : MCElement
    gamma : NilElement or GaugeElement
        Gauge element of ``m (x) phi.source``.

    Returns
    -------
    GaugeElement
        ``h`` with ``Af(h)(MC(phi)(omega)) = MC(phi)(Af(exp gamma)(omega))``,
        obtained by pushing the path ``t -> Af(exp(t gamma))(omega)`` and
        integrating it.

    """
    omega = MCElement(omega)
    g = gamma if isinstance(gamma, GaugeElement) else GaugeElement(gamma)
    omega.ambient.check_same(g.ambient)
    target = tensor_with_m(phi.target, omega.ambient.context)

    path = path_from_gauge(g, omega)
    pushed = push_path(phi, path, target)
    start = mc_pushforward(phi, omega, target)
    end = mc_pushforward(phi, af_action(g, omega), target)
    if pushed.start != start or pushed.end != end:
        raise InvariantViolation("pushed path does not join the pushed "
                                 "endpoints")
    h = integrate_mc_path(pushed)
    if af_action(h, start) != end:
        raise InvariantViolation("gauge witness fails its equation")
    logger.debug("gauge_respect: witness of t-degree %d found",
                 pushed.one_part.degree)
    return h
