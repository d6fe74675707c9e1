import logging
from fractions import Fraction

from ..core import bernoulli_number, inverse_factorial
from ..exceptions import (ContextMismatchError, DegreeError,
                          NotMaurerCartanError)


logger = logging.getLogger(__name__)


def curvature(omega):
    """``d(omega) + 1/2 [omega, omega]`` for ``omega`` in ``m (x) g^1``."""
    if omega.degree != 1:
        raise DegreeError("curvature is defined on degree 1 elements, "
                          "got degree {}".format(omega.degree))
    ambient = omega.ambient
    return ambient.d(omega) + ambient.bracket(omega, omega) * Fraction(1, 2)


def is_maurer_cartan(omega):
    return curvature(omega).is_zero()


class MCElement:
    """A Maurer-Cartan element of ``m (x) g``.

    Construction checks that the curvature vanishes exactly and raises
    :class:`~mcdeform.exceptions.NotMaurerCartanError` otherwise.

    """

    __slots__ = ('value',)

    def __init__(self, value):
        if isinstance(value, MCElement):
            value = value.value
        if value.degree != 1:
            raise DegreeError("an MC element has degree 1")
        if not is_maurer_cartan(value):
            raise NotMaurerCartanError("element has non-zero curvature")
        self.value = value

    def __repr__(self):
        return 'MCElement({})'.format(self.ambient.format(self.value))

    @property
    def ambient(self):
        return self.value.ambient

    def __eq__(self, other):
        if isinstance(other, MCElement):
            other = other.value
        return self.value == other

    def __hash__(self):
        return hash(self.value)

    def reduce(self, j):
        """Image modulo ``m^(j+1)`` in ``ambient.at_order(j)``."""
        return MCElement(self.ambient.reduce(self.value, j))


def _as_value(x):
    return x.value if isinstance(x, MCElement) else x


def _compositions(n, parts):
    """Tuples of ``parts`` positive integers summing to ``n``."""
    if parts == 1:
        yield (n,)
        return
    for first in range(1, n - parts + 2):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def bch_series(x, y, bracket, depth):
    """Baker-Campbell-Hausdorff series ``log(exp(x) exp(y))``.

    Computed with the recursion
    ``(n+1) Z_(n+1) = 1/2 [x - y, Z_n]
    + sum_(p>=1, 2p<=n) B_2p/(2p)! sum_(k_1+...+k_2p=n)
    [Z_k1, [... [Z_k2p, x + y] ...]]`` starting from ``Z_1 = x + y``,
    where ``Z_n`` collects the terms of bracket length ``n``.

    Parameters
    ----------
    x, y : element
        Elements of a nilpotent Lie algebra supporting ``+``, ``-`` and
        multiplication by Fractions.
    bracket : callable
        The Lie bracket.
    depth : int
        Terms with more than ``depth`` letters are dropped. Use the
        nilpotency order, for which the result is exact.

    """
    s = x + y
    u = x - y
    z = [None, s]
    for n in range(1, depth):
        acc = bracket(u, z[n]) * Fraction(1, 2)
        for p in range(1, n // 2 + 1):
            coef = bernoulli_number(2 * p) * inverse_factorial(2 * p)
            if not coef:
                continue
            for ks in _compositions(n, 2 * p):
                term = s
                for k in reversed(ks):
                    term = bracket(z[k], term)
                acc = acc + term * coef
        z.append(acc * Fraction(1, n + 1))
    result = z[1]
    for term in z[2:]:
        result = result + term
    return result


def bch(gamma1, gamma2):
    """Log of ``exp(gamma1) exp(gamma2)`` in ``m (x) g^0``.

    Exact: terms of bracket length above the truncation order vanish.

    """
    gamma1, gamma2 = _log(gamma1), _log(gamma2)
    ambient = gamma1.ambient
    ambient.check_same(gamma2.ambient)
    if gamma1.degree != 0 or gamma2.degree != 0:
        raise DegreeError("gauge logarithms have degree 0")
    return bch_series(gamma1, gamma2, ambient.bracket, ambient.order)


def _log(g):
    return g.log if isinstance(g, GaugeElement) else g


class GaugeElement:
    """Element ``exp(gamma)`` of the gauge group, stored by its log.

    Multiplication is the BCH product; ``g * h`` means ``exp(log g)
    exp(log h)``.

    """

    __slots__ = ('log',)

    def __init__(self, log):
        if isinstance(log, GaugeElement):
            log = log.log
        if log.degree != 0:
            raise DegreeError("gauge logarithms have degree 0, got {}"
                              .format(log.degree))
        self.log = log

    @classmethod
    def identity(cls, ambient):
        return cls(ambient.zero(0))

    @property
    def ambient(self):
        return self.log.ambient

    def __repr__(self):
        return 'GaugeElement(exp({}))'.format(self.ambient.format(self.log))

    def __eq__(self, other):
        if not isinstance(other, GaugeElement):
            return NotImplemented
        return self.log == other.log

    def __hash__(self):
        return hash(self.log)

    def __mul__(self, other):
        if not isinstance(other, GaugeElement):
            return NotImplemented
        return GaugeElement(bch(self.log, other.log))

    def compose(self, other):
        return self * other

    def inverse(self):
        return GaugeElement(-self.log)

    def is_identity(self):
        return self.log.is_zero()

    def reduce(self, j):
        return GaugeElement(self.ambient.reduce(self.log, j))

    def act(self, omega):
        """The affine action ``Af(self)(omega)``."""
        return af_action(self, omega)

    def adjoint(self, alpha):
        """The adjoint action ``Ad(self)(alpha)``."""
        return ad_exp(self, alpha)

    def apply_morphism(self, phi, target=None):
        """``exp(phi(log))``."""
        return GaugeElement(self.ambient.apply_morphism(phi, self.log,
                                                        target))


def ad_exp(g, alpha):
    """Adjoint action ``Ad(exp gamma)(alpha) = sum ad(gamma)^i alpha / i!``.

    The sum is finite since ``ad(gamma)`` raises the order in ``m``.

    """
    gamma = _log(g)
    ambient = gamma.ambient
    ambient.check_same(alpha.ambient)
    result, term = alpha, alpha
    for i in range(1, ambient.order + 1):
        term = ambient.bracket(gamma, term) * Fraction(1, i)
        if term.is_zero():
            break
        result = result + term
    return result


def af_action(g, omega):
    """Affine gauge action on degree 1 elements.

    ``Af(exp gamma)(omega) = exp(ad gamma)(omega)
    - sum_(i>=0) ad(gamma)^i (d gamma) / (i+1)!``.

    Returns an :class:`MCElement` when ``omega`` is one, a bare
    :class:`~mcdeform.dgla.NilElement` otherwise (the action is defined
    on all of ``m (x) g^1``).

    """
    gamma = _log(g)
    value = _as_value(omega)
    ambient = gamma.ambient
    if value.ambient is not ambient and value.ambient != ambient:
        raise ContextMismatchError("gauge element and MC element live in "
                                   "different ambients")
    if value.degree != 1:
        raise DegreeError("the affine action is defined in degree 1")

    result = ad_exp(gamma, value)
    term = ambient.d(gamma)
    i = 0
    while not term.is_zero() and i < ambient.order:
        result = result - term * inverse_factorial(i + 1)
        i += 1
        term = ambient.bracket(gamma, term)

    if isinstance(omega, MCElement):
        return MCElement(result)
    return result


def infinitesimal_action(gamma, omega):
    """``af(gamma)(omega) = [gamma, omega] - d(gamma)``."""
    value = _as_value(omega)
    ambient = gamma.ambient
    return ambient.bracket(gamma, value) - ambient.d(gamma)
