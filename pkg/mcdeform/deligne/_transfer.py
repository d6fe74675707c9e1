import logging
from dataclasses import dataclass

from ..base import Report
from ..core import QMatrix, induced_map, is_bijective, solve
from ..dgla import NilElement, cohomology, is_quasi_iso, tensor_with_m
from ..exceptions import (ContextMismatchError, InvariantViolation,
                          PreconditionError)
from ..gauge import GaugeElement, MCElement, af_action, bch, curvature, \
    twisted
from ._obstruction import (_obstruction, connect_one_order,
                           lift_mc_one_order, o1)
from ._reduced import reduced_equal


logger = logging.getLogger(__name__)


def _require_quasi_iso(phi):
    report = is_quasi_iso(phi)
    if not report:
        raise PreconditionError("morphism is not a quasi-isomorphism ({})"
                                .format(', '.join(
                                    c.name for c in report.failures)))


def push_class(phi, cls):
    """Image of an obstruction class under ``H(phi)``.

    Obstructions are functorial: the image of the class of ``g``-data is
    the class of the ``phi``-image of that data.

    """
    rep = cls.representative
    target = tensor_with_m(phi.target, rep.ambient.context)
    return _obstruction(cls.level,
                        rep.ambient.apply_morphism(phi, rep, target),
                        cls.order)


def _preimage_cocycle(phi, cls, ambient):
    """A layer element of ``n_j (x) Z^1(g)`` whose image has class ``cls``."""
    hg = cohomology(phi.source, 1)
    hh = cls.cohomology
    m = induced_map(hg, hh, lambda v: phi.apply_local(1, v))
    indices = phi.source.space.indices(1)
    terms = {}
    for mono, coords in cls.coordinates.items():
        if not any(coords):
            continue
        a = solve(m, coords)
        if a is None:
            raise InvariantViolation("H^1 of a quasi-isomorphism is not "
                                     "surjective")
        z = hg.from_coordinates(a)
        for k, c in enumerate(z):
            if c:
                terms[(indices[k], mono)] = c
    return NilElement(ambient, 1, terms)


@dataclass(frozen=True)
class TransferResult:
    """``omega`` in ``m (x) g`` and ``gauge`` in ``m (x) h`` with
    ``Af(gauge)(phi(omega)) = chi``."""
    omega: MCElement
    gauge: GaugeElement


def transfer_mc(phi, chi):
    """Transfer an MC element along a quasi-isomorphism ``phi: g -> h``.

    Builds ``omega`` and ``h`` order by order: reduce the previous gauge
    element, lift ``omega`` (its obstruction dies because ``H^2(phi)``
    is injective), correct it by a cocycle so that the connecting
    obstruction on the ``h`` side vanishes (``H^1(phi)`` is surjective)
    and connect.

    Parameters
    ----------
    phi : DGLAMorphism
        A quasi-isomorphism.
    chi : MCElement
        Maurer-Cartan element of ``m (x) phi.target``.

    Returns
    -------
    TransferResult

    """
    chi = MCElement(chi)
    if chi.ambient.base != phi.target:
        raise ContextMismatchError("MC element does not live over the "
                                   "target of the morphism")
    _require_quasi_iso(phi)
    context = chi.ambient.context
    ambient_g = tensor_with_m(phi.source, context)
    ambient_h = chi.ambient
    order = context.order

    omega = ambient_g.zero(1)
    h = GaugeElement.identity(ambient_h)
    for j in range(1, order + 1):
        ag, ah = ambient_g.at_order(j), ambient_h.at_order(j)
        chi_j = ambient_h.reduce(chi.value, j)
        h_prev = h.reduce(j)
        chi_p = af_action(h_prev.inverse(), chi_j)

        omega_pp = lift_mc_one_order(ambient_g.reduce(omega, j), j)
        if omega_pp is None:
            raise InvariantViolation("lifting obstruction does not vanish "
                                     "although H^2(phi) is injective")
        cls = o1(ag.apply_morphism(phi, omega_pp, ah), chi_p, j)
        gamma = _preimage_cocycle(phi, cls, ag)
        omega_j = omega_pp - gamma

        step = connect_one_order(ag.apply_morphism(phi, omega_j, ah), chi_p,
                                 j)
        if step is None:
            raise InvariantViolation("connecting obstruction does not "
                                     "vanish after the cocycle correction")
        h = h_prev * step
        omega = ambient_g.embed(omega_j)
        h = GaugeElement(ambient_h.embed(h.log))
        logger.debug("transfer_mc: order %d, o1 class %s", j, cls.format())

    if not curvature(omega).is_zero():
        raise InvariantViolation("transferred element is not Maurer-Cartan")
    omega = MCElement(omega)
    if af_action(h, ambient_g.apply_morphism(phi, omega.value,
                                             ambient_h)) != chi.value:
        raise InvariantViolation("transfer witness fails its equation")
    return TransferResult(omega, h)


def _stabilizer_preimage(phi, omega_j, delta, ambient_h):
    """``kappa`` closed for ``d_omega`` with ``phi(kappa) - delta`` exact
    for ``d_phi(omega)``."""
    ag = omega_j.ambient
    source_cocycles = twisted(omega_j).cocycle_basis(0)
    chi = MCElement(ag.apply_morphism(phi, omega_j.value, ambient_h))
    boundary = twisted(chi).matrix(-1)

    columns = [ambient_h.coordinates(ag.apply_morphism(phi, k, ambient_h))
               for k in source_cocycles]
    dim = ambient_h.dim(0)
    system = QMatrix.from_columns(columns, dim) if columns else \
        QMatrix.zeros(dim, 0)
    system = system.hstack(boundary)
    x = solve(system, ambient_h.coordinates(delta))
    if x is None:
        raise InvariantViolation("H^0 of the twisted morphism is not "
                                 "surjective")
    kappa = ag.zero(0)
    for c, k in zip(x, source_cocycles):
        if c:
            kappa = kappa + k * c
    return kappa


def lift_gauge(phi, omega, omega2, h):
    """Lift a gauge morphism along a quasi-isomorphism ``phi: g -> h``.

    Parameters
    ----------
    phi : DGLAMorphism
    omega, omega2 : MCElement
        Maurer-Cartan elements of ``m (x) phi.source``.
    h : GaugeElement
        Gauge element of ``m (x) phi.target`` with
        ``Af(h)(phi(omega)) = phi(omega2)``.

    Returns
    -------
    GaugeElement
        ``g`` with ``Af(g)(omega) = omega2`` and ``phi(g)`` reduced-equal
        to ``h``.

    Notes
    -----
    At each order the previous ``g`` is extended by a connecting element
    (the connecting obstruction vanishes since ``H^1(phi)`` is injective)
    and then corrected by ``exp(kappa)``, ``kappa`` closed for the twisted
    differential, so that its reduced class matches ``h``.

    """
    omega, omega2 = MCElement(omega), MCElement(omega2)
    ambient_g = omega.ambient
    ambient_g.check_same(omega2.ambient)
    if ambient_g.base != phi.source:
        raise ContextMismatchError("MC elements do not live over the "
                                   "source of the morphism")
    _require_quasi_iso(phi)
    ambient_h = h.ambient
    chi = ambient_g.apply_morphism(phi, omega.value, ambient_h)
    chi2 = ambient_g.apply_morphism(phi, omega2.value, ambient_h)
    if af_action(h, chi) != chi2:
        raise PreconditionError("gauge element does not carry phi(omega) "
                                "to phi(omega2)")

    g = GaugeElement.identity(ambient_g)
    for j in range(1, ambient_g.order + 1):
        ag, ah = ambient_g.at_order(j), ambient_h.at_order(j)
        omega_j, omega2_j = omega.reduce(j), omega2.reduce(j)
        h_j = h.reduce(j)

        g_pp = g.reduce(j)
        omega_pp = af_action(g_pp, omega_j)
        cls = o1(omega_pp, omega2_j, j)
        if not cls.is_zero:
            raise InvariantViolation("connecting obstruction does not "
                                     "vanish although H^1(phi) is injective")
        step = connect_one_order(omega_pp, omega2_j, j)
        g_j = step * g_pp

        chi_j = MCElement(ag.apply_morphism(phi, omega_j.value, ah))
        image = g_j.apply_morphism(phi, ah)
        delta = bch(-image.log, h_j.log)
        kappa = _stabilizer_preimage(phi, omega_j, delta, ah)
        g_j = g_j * GaugeElement(kappa)

        if af_action(g_j, omega_j) != omega2_j:
            raise InvariantViolation("corrected gauge element lost its "
                                     "equation")
        if not reduced_equal(g_j.apply_morphism(phi, ah), h_j, chi_j):
            raise InvariantViolation("reduced classes do not match at "
                                     "order {}".format(j))
        g = GaugeElement(ambient_g.embed(g_j.log))
        logger.debug("lift_gauge: order %d done", j)

    return g


def twisted_quasi_iso_report(phi, omega, degrees=(-1, 0, 1)):
    """Check that ``1 (x) phi`` is a quasi-isomorphism of twisted complexes.

    Returns a :class:`~mcdeform.base.Report` with one check per degree.

    """
    omega = MCElement(omega)
    ag = omega.ambient
    ah = tensor_with_m(phi.target, ag.context)
    source = twisted(omega)
    target = twisted(MCElement(ag.apply_morphism(phi, omega.value, ah)))

    def linear_map(degree):
        def apply(v):
            x = ag.from_coordinates(degree, v)
            return ah.coordinates(ag.apply_morphism(phi, x, ah))
        return apply

    report = Report('twisted quasi-isomorphism')
    for i in degrees:
        m = induced_map(source.cohomology(i), target.cohomology(i),
                        linear_map(i))
        report.add('H^{}'.format(i), is_bijective(m), i,
                   'dim {} -> dim {}'.format(m.cols, m.rows))
    return report
