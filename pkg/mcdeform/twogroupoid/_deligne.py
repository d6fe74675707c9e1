import logging
from dataclasses import dataclass, field
from functools import cached_property

from ..base import BaseCrossedGroupoid, Check, Report, run_checks
from ..core import rank, QMatrix
from ..deligne import (Connected, ObstructedAtOrder, connect_greedy,
                       lift_gauge, stabilizer_exp, transfer_mc,
                       twisted_quasi_iso_report)
from ..dgla import is_quasi_iso, tensor_with_m
from ..exceptions import (ContextMismatchError, InvariantViolation,
                          MCDeformError, PreconditionError)
from ..gauge import (GaugeElement, MCElement, ad_exp, af_action, bch_series,
                     twisted)
from ._twogroupoid import (TwoGroupoid, _take, _witnessed,
                           check_crossed_axioms, check_two_groupoid_axioms,
                           reconstruction_report)


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GaugeArrow:
    """The 1-morphism ``gauge: source -> Af(gauge)(source)``."""
    source: MCElement
    gauge: GaugeElement

    @cached_property
    def target(self):
        return af_action(self.gauge, self.source)


@dataclass(frozen=True)
class CosetElement:
    """Element of ``N_omega``, a canonical representative of a coset of
    ``d_omega(m (x) g^-2)`` in ``m (x) g^-1``."""
    omega: MCElement
    representative: object


class CokernelAlgebra:
    """``a_omega = m (x) g^-1 / d_omega(m (x) g^-2)`` with the bracket
    ``[a, b]_omega = [d_omega a, b]``.

    Elements are handled through canonical representatives, the unique
    coset members vanishing at the pivot coordinates of the image.

    """

    def __init__(self, omega):
        self.omega = MCElement(omega)
        self.ambient = self.omega.ambient
        self.complex = twisted(self.omega)
        self.image = self.complex.boundary_space(-1)

    def __repr__(self):
        return 'CokernelAlgebra(dim={})'.format(self.dim)

    @property
    def dim(self):
        return self.ambient.dim(-1) - self.image.dim

    def canonical(self, x):
        reduced = self.image.reduce(self.ambient.coordinates(x))
        return self.ambient.from_coordinates(-1, reduced)

    def basis(self):
        """Coset basis: unit vectors at the non-pivot coordinates."""
        n = self.ambient.dim(-1)
        return [self.ambient.from_coordinates(
            -1, [int(k == p) for k in range(n)])
            for p in self.image.complement_positions()]

    def raw_bracket(self, a, b):
        return self.ambient.bracket(self.complex.apply(a), b)

    def bracket(self, a, b):
        return self.canonical(self.raw_bracket(a, b))

    def multiply(self, a, b):
        """Group law of ``N_omega``: BCH for ``[-, -]_omega``."""
        return self.canonical(bch_series(a, b, self.bracket,
                                         self.ambient.order))

    def feedback(self, a):
        """``D_omega(a) = exp(d_omega a)``."""
        return GaugeElement(self.complex.apply(a))

    @property
    def feedback_matrix(self):
        return self.complex.matrix(-1)

    def kernel_basis(self):
        """Canonical representatives of a basis of ``Ker(D_omega)``."""
        h = self.complex.cohomology(-1)
        return [self.canonical(self.ambient.from_coordinates(-1, v))
                for v in h.representatives]


class DeligneCrossedGroupoid(BaseCrossedGroupoid):
    """The crossed groupoid of the Deligne 2-groupoid on sampled data.

    Objects are the sampled MC elements and their images under the
    sampled gauge elements. ``N(omega)`` is ``exp(a_omega)``,
    ``twist(g, a) = Ad(g)(a)`` and ``D(a) = exp(d_omega a)``.

    """

    def __init__(self, ambient, objects, gauges, max_cells=3):
        self.ambient = ambient
        self.max_cells = max_cells
        self.samples = [MCElement(x) for x in objects]
        self.gauges = [GaugeElement.identity(ambient)] + [
            GaugeElement(g) for g in gauges]
        for x in self.samples:
            ambient.check_same(x.ambient)
        for g in self.gauges:
            ambient.check_same(g.ambient)

        found = []
        for x in self.samples + [af_action(g, x) for x in self.samples
                                 for g in self.gauges[1:]]:
            if x not in found:
                found.append(x)
        self._object_list = found
        self._algebras = {}

    def __repr__(self):
        return '<DeligneCrossedGroupoid {} objects, {} gauges>'.format(
            len(self._object_list), len(self.gauges))

    def algebra(self, omega):
        omega = MCElement(omega)
        if omega not in self._algebras:
            self._algebras[omega] = CokernelAlgebra(omega)
        return self._algebras[omega]

    def _objects(self):
        return self._object_list

    def _arrows(self):
        return [GaugeArrow(x, g) for x in self.samples for g in self.gauges]

    def arrows_from(self, x):
        return [GaugeArrow(x, g) for g in self.gauges]

    def _cells(self, x):
        alg = self.algebra(x)
        basis = alg.basis()
        reps = basis[:max(self.max_cells - 1, 1)]
        if len(basis) > 1:
            combo = self.ambient.zero(-1)
            for k, b in enumerate(basis, start=1):
                combo = combo + b * k
            reps.append(alg.canonical(combo))
        return [CosetElement(x, r) for r in reps]

    def source(self, f):
        return f.source

    def target(self, f):
        return f.target

    def compose(self, g, f):
        if f.target != g.source:
            raise PreconditionError("1-morphisms are not composable")
        return GaugeArrow(f.source, g.gauge * f.gauge)

    def inverse(self, f):
        return GaugeArrow(f.target, f.gauge.inverse())

    def identity(self, x):
        return GaugeArrow(x, GaugeElement.identity(self.ambient))

    def arrows_equal(self, f, g):
        return f.source == g.source and f.gauge == g.gauge

    def objects_equal(self, x, y):
        return x == y

    def n_multiply(self, a, b):
        if a.omega != b.omega:
            raise ContextMismatchError("cells live over different objects")
        return CosetElement(a.omega, self.algebra(a.omega).multiply(
            a.representative, b.representative))

    def n_inverse(self, a):
        return CosetElement(a.omega, -a.representative)

    def n_identity(self, x):
        return CosetElement(x, self.ambient.zero(-1))

    def n_equal(self, a, b):
        return a.omega == b.omega and a.representative == b.representative

    def n_base(self, a):
        return a.omega

    def twist(self, f, a):
        if f.source != a.omega:
            raise PreconditionError("cell does not live over the source of "
                                    "the 1-morphism")
        target = f.target
        return CosetElement(target, self.algebra(target).canonical(
            ad_exp(f.gauge, a.representative)))

    def feedback(self, a):
        return GaugeArrow(a.omega,
                          self.algebra(a.omega).feedback(a.representative))


def deligne_report(crossed, max_cells=3):
    """Checks specific to the Deligne instance.

    The induced bracket is well defined on cosets, antisymmetric and
    satisfies the Jacobi identity; ``d_omega`` is a Lie morphism out of
    ``a_omega`` whose exponentials stabilize ``omega``; and the square
    ``D_(omega') o twist(g) = Ad(g) o D_omega`` commutes.

    """
    objects = crossed.objects()
    ambient = crossed.ambient

    def object_checks(ix):
        x = objects[ix]
        alg = crossed.algebra(x)
        cells = _take(crossed.cells(x), max_cells)
        reps = [a.representative for a in cells]
        checks = []
        for ia, a in enumerate(reps):
            for ib, beta in enumerate(_take(ambient.basis_elements(-2), 4)):
                value = alg.raw_bracket(a, alg.complex.apply(beta))
                checks.append(Check(
                    'bracket_well_defined',
                    alg.image.contains(ambient.coordinates(value)),
                    (ix, ia, ib)))
            checks.append(Check(
                'feedback_stabilizes',
                af_action(alg.feedback(a), x) == x, (ix, ia)))
            for ib, b in enumerate(reps):
                ab, ba = alg.bracket(a, b), alg.bracket(b, a)
                checks.append(Check('bracket_antisymmetry',
                                    (ab + ba).is_zero(), (ix, ia, ib)))
                checks.append(Check(
                    'feedback_lie_morphism',
                    alg.complex.apply(ab) == ambient.bracket(
                        alg.complex.apply(a), alg.complex.apply(b)),
                    (ix, ia, ib)))
                for ic, c in enumerate(reps):
                    lhs = alg.bracket(a, alg.bracket(b, c))
                    rhs = alg.bracket(alg.bracket(a, b), c) + \
                        alg.bracket(b, alg.bracket(a, c))
                    checks.append(Check('bracket_jacobi', lhs == rhs,
                                        (ix, ia, ib, ic)))
            for jg, f in enumerate(crossed.arrows_from(x)):
                twisted_cell = crossed.twist(f, cells[ia])
                target_alg = crossed.algebra(f.target)
                lhs = target_alg.complex.apply(twisted_cell.representative)
                rhs = ad_exp(f.gauge, alg.complex.apply(a))
                checks.append(Check('commuting_square', lhs == rhs,
                                    (ix, ia, jg)))
        return checks

    report = Report('Deligne crossed groupoid')
    report.extend(_witnessed(run_checks(object_checks, range(len(objects)))))
    return report


@dataclass
class DeligneCrossedData:
    """Crossed groupoid data of the Deligne 2-groupoid on samples."""
    ambient: object
    crossed: DeligneCrossedGroupoid
    report: Report = field(default=None)

    def algebra(self, omega):
        return self.crossed.algebra(omega)

    def feedback_matrix(self, omega):
        return self.crossed.algebra(omega).feedback_matrix

    @property
    def two_groupoid(self):
        return TwoGroupoid(self.crossed)


def build_deligne_crossed(ambient, mc_samples, gauge_samples=(), check=True,
                          max_cells=3):
    """Crossed groupoid data of the Deligne 2-groupoid on sampled data.

    Parameters
    ----------
    ambient : NilpotentDGLA
    mc_samples : list of MCElement
    gauge_samples : list of GaugeElement, optional
    check : bool, optional
        Verify the crossed groupoid axioms and the Deligne specific
        identities on the samples (default ``True``). A failure raises
        :class:`~mcdeform.exceptions.InvariantViolation` naming the
        witnessing sample.

    Returns
    -------
    DeligneCrossedData

    """
    crossed = DeligneCrossedGroupoid(ambient, mc_samples, gauge_samples,
                                     max_cells=max_cells)
    data = DeligneCrossedData(ambient, crossed)
    if check:
        report = check_crossed_axioms(crossed, max_cells=max_cells)
        report.extend(deligne_report(crossed, max_cells=max_cells).checks)
        data.report = report
        if not report:
            failure = report.first_failure()
            raise InvariantViolation("{} fails on sample {}".format(
                failure.name, failure.witness))
    return data


def crossed_check_report(data, max_cells=2):
    """All crossed groupoid, 2-groupoid and reconstruction checks."""
    crossed = data.crossed
    report = Report('Deligne 2-groupoid')
    report.extend(check_crossed_axioms(crossed, max_cells).checks)
    report.extend(deligne_report(crossed, max_cells).checks)
    report.extend(check_two_groupoid_axioms(TwoGroupoid(crossed),
                                            max_cells).checks)
    report.extend(reconstruction_report(crossed, max_cells).checks)
    return report


def pi1_reduced(omega):
    """``pi_1`` of the Deligne 2-groupoid at ``omega``, the reduced
    stabilizer (see :func:`~mcdeform.deligne.stabilizer_exp`)."""
    return stabilizer_exp(omega)


class Pi2Group:
    """``pi_2`` at ``omega``: the kernel of ``D_omega``, an abelian group
    isomorphic to the twisted ``H^-1`` through ``exp``."""

    def __init__(self, omega):
        self.algebra = CokernelAlgebra(omega)
        self.omega = self.algebra.omega
        self.cohomology = self.algebra.complex.cohomology(-1)
        self.basis = self.algebra.kernel_basis()

        ambient = self.algebra.ambient
        report = Report('pi_2')
        if self.basis:
            coords = [ambient.coordinates(b) for b in self.basis]
            independent = rank(QMatrix(coords)) == len(self.basis)
        else:
            independent = True
        report.add('dimension',
                   independent and len(self.basis) ==
                   self.cohomology.dimension)
        for k, b in enumerate(self.basis):
            report.add('in_kernel',
                       self.algebra.feedback(b).is_identity(), k)
        alg = self.algebra
        for a_ix, a in enumerate(self.basis):
            for b_ix, b in enumerate(self.basis):
                comm = alg.multiply(alg.multiply(a, b),
                                    alg.multiply(-a, -b))
                report.add('abelian', comm.is_zero(), (a_ix, b_ix))
        self.report = report
        if not report:
            raise InvariantViolation("pi_2 check {} fails".format(
                report.first_failure().name))

    def __repr__(self):
        return 'Pi2Group(dimension={})'.format(self.dimension)

    @property
    def dimension(self):
        return len(self.basis)

    def transport(self, g):
        """Image of the basis under ``twist(g)``, in ``pi_2`` at
        ``Af(g)(omega)``."""
        target = CokernelAlgebra(af_action(g, self.omega))
        return [target.canonical(ad_exp(g, b)) for b in self.basis]


def pi2(omega):
    """``pi_2`` of the Deligne 2-groupoid at ``omega``."""
    return Pi2Group(omega)


def pi2_transport_report(g, omega):
    """Whether ``twist(g)`` restricts to an isomorphism of ``pi_2``."""
    source = Pi2Group(omega)
    target = Pi2Group(af_action(g, source.omega))
    images = source.transport(g)
    ambient = source.algebra.ambient
    report = Report('pi_2 transport')
    report.add('lands_in_kernel',
               all(target.algebra.feedback(v).is_identity() for v in images))
    same_dim = source.dimension == target.dimension
    if images and same_dim:
        full = rank(QMatrix([ambient.coordinates(v) for v in images])) == \
            len(images)
    else:
        full = same_dim
    report.add('bijective', full)
    return report


@dataclass
class Pi0Evidence:
    """Partition of sampled MC elements found by greedy connection.

    ``classes`` lists groups of sample indices joined by gauge witnesses.
    ``obstructed`` and ``inconclusive`` list ``(i, j, order)`` triples for
    pairs that could not be joined.
    """
    classes: list
    obstructed: list
    inconclusive: list

    def to_dict(self):
        return {'classes': self.classes, 'obstructed': self.obstructed,
                'inconclusive': self.inconclusive}


def pi0_evidence(samples):
    """Witness-level evidence about ``pi_0`` on sampled MC elements.

    This never enumerates ``pi_0``: pairs are joined when
    :func:`~mcdeform.deligne.connect_greedy` finds a witness.

    """
    samples = [MCElement(x) for x in samples]
    parent = list(range(len(samples)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    obstructed, inconclusive = [], []
    for i in range(len(samples)):
        for j in range(i + 1, len(samples)):
            if find(i) == find(j):
                continue
            result = connect_greedy(samples[i], samples[j])
            if isinstance(result, Connected):
                parent[find(j)] = find(i)
            elif isinstance(result, ObstructedAtOrder):
                obstructed.append((i, j, result.order))
            else:
                inconclusive.append((i, j, result.order))

    groups = {}
    for i in range(len(samples)):
        groups.setdefault(find(i), []).append(i)
    return Pi0Evidence(sorted(groups.values()), obstructed, inconclusive)


def weak_equiv_evidence(phi, samples, target_samples=()):
    """Evidence that ``phi`` induces a weak equivalence of Deligne
    2-groupoids.

    For each sampled ``omega``: the maps induced on twisted ``H^-1``
    (``pi_2``) and ``H^0`` (``pi_1``) are bijective, and transferring
    ``phi(omega)`` back and lifting the gauge witness recovers ``omega``
    up to gauge (``pi_0`` injectivity). Each MC element of
    ``target_samples`` is transferred (``pi_0`` surjectivity).

    Raises
    ------
    PreconditionError
        If ``phi`` is not a quasi-isomorphism.

    """
    quasi = is_quasi_iso(phi)
    if not quasi:
        raise PreconditionError("morphism is not a quasi-isomorphism")
    samples = [MCElement(x) for x in samples]
    target_samples = [MCElement(x) for x in target_samples]

    def sample_checks(i):
        omega = samples[i]
        checks = []
        try:
            rep = twisted_quasi_iso_report(phi, omega, degrees=(-1, 0))
            checks.append(Check('pi2', rep.checks[0].passed, i,
                                rep.checks[0].detail))
            checks.append(Check('pi1', rep.checks[1].passed, i,
                                rep.checks[1].detail))
            ah = tensor_with_m(phi.target, omega.ambient.context)
            chi = omega.ambient.apply_morphism(phi, omega.value, ah)
            result = transfer_mc(phi, chi)
            g = lift_gauge(phi, result.omega, omega, result.gauge)
            checks.append(Check('pi0_injective',
                                af_action(g, result.omega) == omega, i))
        except MCDeformError as exc:
            checks.append(Check('pi0_injective', False, i, str(exc)))
        return checks

    def target_checks(i):
        chi = target_samples[i]
        try:
            result = transfer_mc(phi, chi)
            ah = chi.ambient
            image = result.omega.ambient.apply_morphism(
                phi, result.omega.value, ah)
            ok = af_action(result.gauge, image) == chi.value
            return [Check('pi0_surjective', ok, i)]
        except MCDeformError as exc:
            return [Check('pi0_surjective', False, i, str(exc))]

    report = Report('weak equivalence evidence')
    report.extend(_witnessed(run_checks(sample_checks, range(len(samples)))))
    report.extend(_witnessed(run_checks(target_checks,
                                        range(len(target_samples)))))
    logger.debug("weak equivalence evidence: %d checks, ok=%s",
                 len(report.checks), report.ok)
    return report
