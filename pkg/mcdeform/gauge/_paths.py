import logging
from fractions import Fraction

from ..core import PolyForm, TPoly, bernoulli_number, inverse_factorial
from ..exceptions import (DegreeError, InvariantViolation,
                          PreconditionError)
from ._gauge import GaugeElement, MCElement, af_action, infinitesimal_action


logger = logging.getLogger(__name__)


class MCPath:
    """A Maurer-Cartan element ``omega^1(t) + dt omega^0(t)`` over the
    interval.

    Parameters
    ----------
    ambient : NilpotentDGLA
    one_part : TPoly
        ``omega^1(t)``, coefficients in ``m (x) g^1``.
    form_part : TPoly
        ``omega^0(t)``, coefficients in ``m (x) g^0``.
    check : bool, optional
        Verify the path invariant at construction (default ``True``) and
        raise :class:`~mcdeform.exceptions.PreconditionError` if it fails.

    Notes
    -----
    The Maurer-Cartan equation splits into ``omega^1(t)`` being MC for
    every ``t`` and the invariant
    ``d/dt omega^1 = d omega^0 + [omega^1, omega^0]``.

    """

    def __init__(self, ambient, one_part, form_part, check=True):
        self.ambient = ambient
        if not isinstance(one_part, TPoly):
            one_part = TPoly(one_part, ambient.zero(1))
        if not isinstance(form_part, TPoly):
            form_part = TPoly(form_part, ambient.zero(0))
        for c in one_part.coefficients:
            if c.degree != 1:
                raise DegreeError("omega^1(t) must have degree 1")
        for c in form_part.coefficients:
            if c.degree != 0:
                raise DegreeError("omega^0(t) must have degree 0")
        self.form = PolyForm(one_part, form_part)
        if check and not self.check():
            raise PreconditionError("not a Maurer-Cartan path: the path "
                                    "invariant fails")

    def __repr__(self):
        return 'MCPath(deg omega^1 = {}, deg omega^0 = {})'.format(
            self.one_part.degree, self.form_part.degree)

    @property
    def one_part(self):
        return self.form.even_part

    @property
    def form_part(self):
        return self.form.odd_part

    def evaluate(self, value):
        """The MC element ``omega^1(value)``."""
        return MCElement(self.form.evaluate(value))

    @property
    def start(self):
        return self.evaluate(0)

    @property
    def end(self):
        return self.evaluate(1)

    def invariant_defect(self):
        """``d/dt omega^1 - d omega^0 - [omega^1, omega^0]`` as a TPoly."""
        ambient = self.ambient
        lhs = self.form.de_rham().odd_part
        rhs = self.form_part.map(ambient.d, ambient.zero(1)) + \
            self.one_part.combine(self.form_part, ambient.bracket,
                                  ambient.zero(1))
        return lhs - rhs

    def curvature(self):
        """Curvature of ``omega^1(t)`` as a polynomial in ``t``."""
        ambient = self.ambient
        d_part = self.one_part.map(ambient.d, ambient.zero(2))
        square = self.one_part.combine(self.one_part, ambient.bracket,
                                       ambient.zero(2))
        return d_part + square.scale(Fraction(1, 2))

    def check(self):
        return self.invariant_defect().is_zero() and \
            self.curvature().is_zero()


def path_from_gauge(gamma, omega0):
    """The MC path ``t -> Af(exp(t gamma))(omega0)``.

    Its ``dt``-component is the constant ``-gamma``.

    """
    gamma = gamma.log if isinstance(gamma, GaugeElement) else gamma
    if not isinstance(omega0, MCElement):
        omega0 = MCElement(omega0)
    ambient = gamma.ambient
    ambient.check_same(omega0.ambient)

    # t^i/i! coefficient: ad(gamma)^(i-1) applied to af(gamma)(omega0)
    coefficients = [omega0.value]
    term = infinitesimal_action(gamma, omega0.value)
    for i in range(1, ambient.order + 1):
        if i > 1:
            term = ambient.bracket(gamma, term)
        if term.is_zero():
            break
        coefficients.append(term * inverse_factorial(i))
    return MCPath(ambient, TPoly(coefficients, ambient.zero(1)),
                  TPoly([-gamma], ambient.zero(0)))


def _log_flow_rhs(gamma_t, xi_t, ambient):
    """``sum_n B_n/n! ad(gamma(t))^n xi(t)``."""
    zero = ambient.zero(0)
    result = xi_t
    term = xi_t
    for n in range(1, ambient.order + 1):
        term = gamma_t.combine(term, ambient.bracket, zero)
        if term.is_zero():
            break
        coef = bernoulli_number(n) * inverse_factorial(n)
        if coef:
            result = result + term.scale(coef)
    return result


def integrate_mc_path(path):
    """Gauge element ``g`` with ``Af(g)(omega^1(0)) = omega^1(1)``.

    Solves ``g'(t) g(t)^-1 = -omega^0(t)``, ``g(0) = 1`` on logarithms,
    ``gamma' = sum_n B_n/n! ad(gamma)^n (-omega^0)``, one order in ``m``
    at a time, and evaluates at ``t = 1``.

    Raises
    ------
    PreconditionError
        If ``path`` violates the path invariant.
    InvariantViolation
        If the resulting gauge element fails the endpoint equation.

    """
    if not path.check():
        raise PreconditionError("not a Maurer-Cartan path")
    ambient = path.ambient
    zero = ambient.zero(0)
    xi = -path.form_part

    gamma_t = TPoly([], zero)
    for j in range(1, ambient.order + 1):
        # exact modulo m^(j+1) after the j-th pass
        gamma_t = _log_flow_rhs(gamma_t, xi, ambient).integrate()
        logger.debug("integrate_mc_path: order %d, t-degree %d", j,
                     gamma_t.degree)

    g = GaugeElement(gamma_t.evaluate(1))
    start, end = path.start, path.end
    if af_action(g, start) != end:
        raise InvariantViolation("integrated gauge element does not carry "
                                 "the start point to the end point")
    return g
