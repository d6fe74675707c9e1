import logging
from dataclasses import dataclass, field
from fractions import Fraction

from ..core import format_monomial, format_rational, solve
from ..dgla import NilElement, cohomology
from ..exceptions import (ContextMismatchError, DegreeError,
                          InvariantViolation, NotMaurerCartanError,
                          ObstructionError, PreconditionError)
from ..gauge import GaugeElement, MCElement, af_action, curvature


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ObstructionClass:
    """A class in ``n_j (x) H^degree(g)``.

    ``coordinates`` maps each monomial of total degree ``order`` to the
    class coordinates of the corresponding component of the
    representative, in the representative basis of ``cohomology``.
    """
    level: str
    order: int
    degree: int
    representative: object
    coordinates: dict
    cohomology: object = field(compare=False, repr=False)

    @property
    def is_zero(self):
        return not any(any(c) for c in self.coordinates.values())

    def __bool__(self):
        return not self.is_zero

    def class_basis(self):
        """Class representatives of ``H^degree(g)`` as ``{name: c}``."""
        space = self.representative.ambient.base.space
        names = space.basis(self.degree)
        return [{names[k]: v for k, v in enumerate(rep) if v}
                for rep in self.cohomology.representatives]

    def format(self):
        parts = []
        basis = ['[{}]'.format(' + '.join(
            '{}*{}'.format(c, n) for n, c in rep.items()))
            for rep in self.class_basis()]
        for mono, coords in self.coordinates.items():
            for c, b in zip(coords, basis):
                if c:
                    parts.append('{}*{}*{}'.format(c, format_monomial(mono),
                                                   b))
        return ' + '.join(parts) or '0'

    def to_dict(self):
        from ..io import element_to_dict

        return {
            'level': self.level,
            'order': self.order,
            'degree': self.degree,
            'zero': self.is_zero,
            'representative': element_to_dict(self.representative),
            'class_basis': [[[n, format_rational(c)] for n, c in rep.items()]
                            for rep in self.class_basis()],
            'classes': [{'monomial': list(m),
                         'coordinates': [format_rational(c) for c in cs]}
                        for m, cs in self.coordinates.items()],
        }


def _layer_vectors(x, j):
    """Local coordinate vectors of ``x`` for each monomial of layer ``j``."""
    space = x.ambient.base.space
    dim = space.dim(x.degree)
    vectors = {m: [Fraction(0)] * dim for m in x.ambient.context.layer(j)}
    for (i, m), c in x.terms.items():
        if sum(m) != j:
            raise InvariantViolation("element is not concentrated in layer "
                                     "{}".format(j))
        vectors[m][space.local_index(i)] = c
    return vectors


def _obstruction(level, rep, j):
    h = cohomology(rep.ambient.base, rep.degree)
    coords = {m: h.class_coordinates(v)
              for m, v in _layer_vectors(rep, j).items()}
    cls = ObstructionClass(level, j, rep.degree, rep, coords, h)
    logger.debug("%s at order %d: %s", level, j,
                 {m: [str(c) for c in cs] for m, cs in coords.items()})
    return cls


def _check_order(x, j):
    if not isinstance(j, int) or j < 1 or j > x.ambient.order:
        raise PreconditionError("order {} outside 1..{}".format(
            j, x.ambient.order))


def _value(x):
    return x.value if isinstance(x, MCElement) else x


def _check_mc_below(x, j, label):
    """``x`` is MC modulo ``m^(j+1)``."""
    if j < 1:
        return
    ambient = x.ambient
    if not curvature(ambient.reduce(x, j)).is_zero():
        raise NotMaurerCartanError("{} is not Maurer-Cartan modulo m^{}"
                                   .format(label, j + 1))


def o2(omega_bar, lift, order):
    """Obstruction to lifting an MC element by one order.

    Parameters
    ----------
    omega_bar : NilElement or MCElement
        Maurer-Cartan modulo ``m^order``.
    lift : NilElement
        Any degree 1 element reducing to ``omega_bar`` modulo ``m^order``;
        terms above ``order`` are ignored.
    order : int
        The order ``j`` being lifted to.

    Returns
    -------
    ObstructionClass
        The class of ``curvature(lift)`` in ``n_j (x) H^2(g)``. It does
        not depend on the lift.

    """
    omega_bar, lift = _value(omega_bar), _value(lift)
    ambient = lift.ambient
    ambient.check_same(omega_bar.ambient)
    if lift.degree != 1 or omega_bar.degree != 1:
        raise DegreeError("MC lifts have degree 1")
    _check_order(lift, order)
    if omega_bar.truncate(order - 1) != lift.truncate(order - 1):
        raise PreconditionError("lift does not reduce to the given element")
    _check_mc_below(omega_bar, order - 1, 'the element to lift')

    cur = curvature(ambient.reduce(lift, order))
    if not cur.truncate(order - 1).is_zero():
        raise InvariantViolation("curvature of a lift has terms below the "
                                 "lifted order")
    return _obstruction('o2', ambient.embed(cur), order)


def lift_mc_one_order(omega_bar, order, correction=None):
    """Lift an MC element modulo ``m^order`` to one modulo ``m^(order+1)``.

    Parameters
    ----------
    omega_bar : NilElement or MCElement
        Maurer-Cartan modulo ``m^order`` (terms of degree ``>= order`` are
        ignored).
    order : int
    correction : NilElement, optional
        A cocycle of ``n_order (x) Z^1(g)`` added to the lift; lifts form
        a torsor under these cocycles.

    Returns
    -------
    NilElement or None
        The canonical representative of the lift, or ``None`` when the
        obstruction :func:`o2` does not vanish.

    """
    omega_bar = _value(omega_bar)
    ambient = omega_bar.ambient
    base = omega_bar.truncate(order - 1)
    cls = o2(base, base, order)
    if not cls.is_zero:
        return None

    space = ambient.base.space
    indices = space.indices(1)
    d1 = ambient.base.matrix_d(1)
    terms = {}
    for mono, vec in _layer_vectors(cls.representative, order).items():
        beta = solve(d1, [-c for c in vec])
        if beta is None:
            raise InvariantViolation("o2 vanishes but d(beta) = -curvature "
                                     "has no solution")
        for k, c in enumerate(beta):
            if c:
                terms[(indices[k], mono)] = c
    result = base + NilElement(ambient, 1, terms)

    if correction is not None:
        if correction.degree != 1:
            raise DegreeError("corrections have degree 1")
        ambient.check_same(correction.ambient)
        if correction.layer(order) != correction:
            raise PreconditionError("correction must be concentrated in "
                                    "order {}".format(order))
        if not ambient.d(correction).is_zero():
            raise PreconditionError("correction is not a cocycle")
        result = result + correction

    if not curvature(ambient.reduce(result, order)).is_zero():
        raise InvariantViolation("lift is not Maurer-Cartan")
    return result


def lift_mc(omega_bar, from_order, to_order=None, corrections=None):
    """Lift an MC element through several orders.

    Returns an :class:`~mcdeform.gauge.MCElement` of
    ``ambient.at_order(to_order)``. Raises
    :class:`~mcdeform.exceptions.ObstructionError` (carrying the class)
    when an obstruction is met.

    """
    omega_bar = _value(omega_bar)
    ambient = omega_bar.ambient
    to_order = ambient.order if to_order is None else to_order
    if not 0 <= from_order <= to_order <= ambient.order:
        raise PreconditionError("orders must satisfy 0 <= from <= to <= N")
    corrections = corrections or {}

    omega = omega_bar.truncate(from_order)
    _check_mc_below(omega, from_order, 'the element to lift')
    for j in range(from_order + 1, to_order + 1):
        lifted = lift_mc_one_order(omega, j, corrections.get(j))
        if lifted is None:
            cls = o2(omega, omega, j)
            raise ObstructionError("obstruction to lifting at order {}: {}"
                                   .format(j, cls.format()), cls)
        omega = lifted
    return MCElement(ambient.reduce(omega, to_order))


def _check_congruent(omega, omega2, order):
    ambient = omega.ambient
    if omega2.ambient is not ambient and omega2.ambient != ambient:
        raise ContextMismatchError("elements live in different ambients")
    _check_order(omega, order)
    if omega.truncate(order - 1) != omega2.truncate(order - 1):
        raise PreconditionError("elements are not congruent modulo m^{}"
                                .format(order))
    _check_mc_below(omega, order, 'first element')
    _check_mc_below(omega2, order, 'second element')


def o1(omega, omega2, order):
    """Obstruction to connecting two congruent MC lifts at one order.

    Both elements must agree modulo ``m^order`` and be Maurer-Cartan
    modulo ``m^(order+1)``. Returns the class of ``omega - omega2`` in
    ``n_order (x) H^1(g)``.

    """
    omega, omega2 = _value(omega), _value(omega2)
    _check_congruent(omega, omega2, order)
    rep = (omega - omega2).layer(order)
    return _obstruction('o1', rep, order)


def connect_one_order(omega, omega2, order):
    """Gauge element of ``n_order (x) g^0`` carrying ``omega`` to
    ``omega2`` modulo ``m^(order+1)``.

    On this layer the action is linear, ``Af(exp gamma)(omega) = omega -
    d(gamma)``, so the equation ``d(gamma) = omega - omega2`` is solved
    monomial by monomial. Returns ``None`` when it has no solution, that
    is when :func:`o1` does not vanish.

    """
    omega, omega2 = _value(omega), _value(omega2)
    _check_congruent(omega, omega2, order)
    ambient = omega.ambient
    diff = (omega - omega2).layer(order)

    indices = ambient.base.space.indices(0)
    d0 = ambient.base.matrix_d(0)
    terms = {}
    for mono, vec in _layer_vectors(diff, order).items():
        if not any(vec):
            continue
        gamma = solve(d0, vec)
        if gamma is None:
            return None
        for k, c in enumerate(gamma):
            if c:
                terms[(indices[k], mono)] = c
    g = GaugeElement(NilElement(ambient, 0, terms))

    moved = af_action(g.reduce(order), ambient.reduce(omega, order))
    if moved != ambient.reduce(omega2, order):
        raise InvariantViolation("connecting element does not connect")
    return g


@dataclass(frozen=True)
class Connected:
    witness: GaugeElement


@dataclass(frozen=True)
class ObstructedAtOrder:
    order: int
    obstruction: ObstructionClass


@dataclass(frozen=True)
class Inconclusive:
    order: int
    obstruction: ObstructionClass


def connect_greedy(omega, omega2):
    """Try to connect two MC elements by a gauge element, order by order.

    At each order the current gauge element is extended by
    :func:`connect_one_order`. When :func:`o1` does not vanish the
    answer is :class:`ObstructedAtOrder` if no earlier choice could have
    mattered (abelian algebra, first order, or vanishing twisted ``H^0``
    at the previous order) and :class:`Inconclusive` otherwise.

    Returns
    -------
    Connected, ObstructedAtOrder or Inconclusive

    """
    omega, omega2 = MCElement(omega), MCElement(omega2)
    ambient = omega.ambient
    ambient.check_same(omega2.ambient)
    base = ambient.base

    g = GaugeElement.identity(ambient)
    for j in range(1, ambient.order + 1):
        current = af_action(g, omega).value.truncate(j)
        target = omega2.value.truncate(j)
        cls = o1(current, target, j)
        if not cls.is_zero:
            definitive = base.is_abelian or j == 1
            if not definitive:
                from ..gauge import twisted

                previous = omega2.reduce(j - 1)
                definitive = twisted(previous).cohomology(0).dimension == 0
            logger.debug("connect_greedy: obstructed at order %d "
                         "(definitive=%s)", j, definitive)
            if definitive:
                return ObstructedAtOrder(j, cls)
            return Inconclusive(j, cls)
        step = connect_one_order(current, target, j)
        if step is None:
            raise InvariantViolation("o1 vanishes but no connecting element "
                                     "exists")
        g = step * g
        logger.debug("connect_greedy: order %d connected", j)

    if af_action(g, omega) != omega2:
        raise InvariantViolation("greedy witness does not connect")
    return Connected(g)
