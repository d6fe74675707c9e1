from dataclasses import dataclass
from itertools import islice

from ..base import BaseCrossedGroupoid, Check, Report, run_checks
from ..exceptions import PreconditionError


@dataclass(frozen=True)
class TwoMorphism:
    """A 2-cell ``cell: source => target`` between parallel 1-morphisms.

    ``cell`` lies in ``N(x)`` for the common source object ``x`` and
    ``target = source o D(cell)``.
    """
    source: object
    target: object
    cell: object


class TwoGroupoid:
    """The 2-groupoid of a crossed groupoid.

    Parameters
    ----------
    crossed : BaseCrossedGroupoid

    Notes
    -----
    Vertical composition of ``a: f => g`` and ``b: g => h`` has cell
    ``a b``; horizontal composition of ``a1: f1 => g1`` (``x -> y``) and
    ``a2: f2 => g2`` (``y -> z``) has cell ``twist(f1^-1, a2) a1``.

    """

    def __init__(self, crossed):
        self.crossed = crossed

    def __repr__(self):
        return 'TwoGroupoid({!r})'.format(self.crossed)

    def cell(self, f, a):
        """The 2-cell ``a: f => f o D(a)``."""
        c = self.crossed
        if not c.objects_equal(c.n_base(a), c.source(f)):
            raise PreconditionError("cell does not live over the source of "
                                    "the 1-morphism")
        return TwoMorphism(f, c.compose(c.feedback(a), f), a)

    def make(self, f, g, a):
        """The 2-cell ``a: f => g``, checking ``g = f o D(a)``."""
        cell = self.cell(f, a)
        if not self.crossed.arrows_equal(cell.target, g):
            raise PreconditionError("g differs from f o D(a)")
        return TwoMorphism(f, g, a)

    def identity_cell(self, f):
        c = self.crossed
        return TwoMorphism(f, f, c.n_identity(c.source(f)))

    def vertical(self, b, a):
        """``b * a``: first ``a: f => g``, then ``b: g => h``."""
        c = self.crossed
        if not c.arrows_equal(a.target, b.source):
            raise PreconditionError("2-cells are not vertically composable")
        return TwoMorphism(a.source, b.target, c.n_multiply(a.cell, b.cell))

    def horizontal(self, a2, a1):
        """``a2 o a1`` for ``a1`` over ``x -> y`` and ``a2`` over ``y -> z``."""
        c = self.crossed
        if not c.objects_equal(c.target(a1.source), c.source(a2.source)):
            raise PreconditionError("2-cells are not horizontally "
                                    "composable")
        cell = c.n_multiply(c.twist(c.inverse(a1.source), a2.cell), a1.cell)
        return TwoMorphism(c.compose(a2.source, a1.source),
                           c.compose(a2.target, a1.target), cell)

    def vertical_inverse(self, a):
        return TwoMorphism(a.target, a.source, self.crossed.n_inverse(a.cell))

    def horizontal_inverse(self, a):
        """``1_(g^-1) o a^-* o 1_(f^-1)`` for ``a: f => g``."""
        c = self.crossed
        left = self.identity_cell(c.inverse(a.target))
        right = self.identity_cell(c.inverse(a.source))
        return self.horizontal(left,
                               self.horizontal(self.vertical_inverse(a),
                                               right))

    def equal(self, a, b):
        c = self.crossed
        return (c.arrows_equal(a.source, b.source)
                and c.arrows_equal(a.target, b.target)
                and c.n_equal(a.cell, b.cell))

    def to_crossed(self):
        """Crossed groupoid of 2-cells out of identities."""
        return ReconstructedCrossedGroupoid(self)


class ReconstructedCrossedGroupoid(BaseCrossedGroupoid):
    """Crossed groupoid recovered from a 2-groupoid.

    ``N(x)`` consists of the 2-cells ``1_x => g`` under horizontal
    composition, ``D(a: 1_x => g) = g`` and
    ``twist(f, a) = 1_f o a o 1_(f^-1)``.
    """

    def __init__(self, two_groupoid):
        self.two = two_groupoid
        self.base = two_groupoid.crossed

    def _objects(self):
        return self.base.objects()

    def _arrows(self):
        return self.base.arrows()

    def arrows_from(self, x):
        return self.base.arrows_from(x)

    def _cells(self, x):
        one = self.base.identity(x)
        return [self.two.cell(one, a) for a in self.base.cells(x)]

    def source(self, f):
        return self.base.source(f)

    def target(self, f):
        return self.base.target(f)

    def compose(self, g, f):
        return self.base.compose(g, f)

    def inverse(self, f):
        return self.base.inverse(f)

    def identity(self, x):
        return self.base.identity(x)

    def arrows_equal(self, f, g):
        return self.base.arrows_equal(f, g)

    def objects_equal(self, x, y):
        return self.base.objects_equal(x, y)

    def n_multiply(self, a, b):
        return self.two.horizontal(a, b)

    def n_inverse(self, a):
        return self.two.horizontal_inverse(a)

    def n_identity(self, x):
        return self.two.identity_cell(self.base.identity(x))

    def n_equal(self, a, b):
        return self.two.equal(a, b)

    def n_base(self, a):
        return self.base.source(a.source)

    def twist(self, f, a):
        two = self.two
        inner = two.horizontal(a, two.identity_cell(self.base.inverse(f)))
        return two.horizontal(two.identity_cell(f), inner)

    def feedback(self, a):
        return a.target


def _take(items, k):
    return list(islice(items, k))


def _composable(c, k):
    """Pairs ``(f1, f2)`` with ``f1: x -> y`` sampled and ``f2`` out of
    ``y``."""
    pairs = []
    for f1 in c.arrows():
        for f2 in _take(c.arrows_from(c.target(f1)), k):
            pairs.append((f1, f2))
    return pairs


def check_crossed_axioms(crossed, max_cells=3):
    """Check the crossed groupoid axioms on the sampled data.

    Checked: ``D(twist(f, a)) = f D(a) f^-1``, ``twist(D(a), b) = a b
    a^-1``, ``D`` and ``twist(f, -)`` are homomorphisms, the action law
    ``twist(f2 f1) = twist(f2) twist(f1)`` and ``twist(1_x) = id``.

    Returns
    -------
    report : :class:`~mcdeform.base.Report`

    """
    c = crossed
    objects = c.objects()
    arrows = c.arrows()

    def object_checks(ix):
        x = objects[ix]
        cells = _take(c.cells(x), max_cells)
        checks = []
        for ia, a in enumerate(cells):
            for ib, b in enumerate(cells):
                ab = c.n_multiply(a, b)
                lhs = c.twist(c.feedback(a), b)
                rhs = c.n_multiply(ab, c.n_inverse(a))
                checks.append(Check('peiffer', c.n_equal(lhs, rhs),
                                    (ix, ia, ib)))
                lhs = c.feedback(ab)
                rhs = c.compose(c.feedback(a), c.feedback(b))
                checks.append(Check('feedback_homomorphism',
                                    c.arrows_equal(lhs, rhs), (ix, ia, ib)))
            checks.append(Check('identity_action',
                                c.n_equal(c.twist(c.identity(x), a), a),
                                (ix, ia)))
        return checks

    def arrow_checks(jf):
        f = arrows[jf]
        x = c.source(f)
        cells = _take(c.cells(x), max_cells)
        finv = c.inverse(f)
        checks = []
        for ia, a in enumerate(cells):
            lhs = c.feedback(c.twist(f, a))
            rhs = c.compose(f, c.compose(c.feedback(a), finv))
            checks.append(Check('equivariance', c.arrows_equal(lhs, rhs),
                                (jf, ia)))
            for ib, b in enumerate(cells):
                lhs = c.twist(f, c.n_multiply(a, b))
                rhs = c.n_multiply(c.twist(f, a), c.twist(f, b))
                checks.append(Check('twist_homomorphism',
                                    c.n_equal(lhs, rhs), (jf, ia, ib)))
            for jg, g in enumerate(_take(c.arrows_from(c.target(f)), 2)):
                lhs = c.twist(c.compose(g, f), a)
                rhs = c.twist(g, c.twist(f, a))
                checks.append(Check('action_law', c.n_equal(lhs, rhs),
                                    (jf, jg, ia)))
        return checks

    report = Report('crossed groupoid axioms')
    report.extend(_witnessed(run_checks(object_checks, range(len(objects)))))
    report.extend(_witnessed(run_checks(arrow_checks, range(len(arrows)))))
    return report


def _witnessed(checks):
    return [ch if not ch.passed else Check(ch.name, True) for ch in checks]


def check_two_groupoid_axioms(two, max_cells=2, max_arrows=2):
    """Check the 2-groupoid axioms on the sampled data.

    Checked: vertical unit, associativity and inverse laws; horizontal
    unit and associativity laws; the exchange law; the horizontal
    inverse.

    """
    c = two.crossed
    objects = c.objects()

    def object_checks(ix):
        x = objects[ix]
        checks = []
        cells = _take(c.cells(x), max_cells)
        for jf, f in enumerate(_take(c.arrows_from(x), max_arrows)):
            one_x = two.identity_cell(c.identity(x))
            for ia, a in enumerate(cells):
                ca = two.cell(f, a)
                w = (ix, jf, ia)
                checks.append(Check(
                    'vertical_unit',
                    two.equal(two.vertical(ca, two.identity_cell(f)), ca)
                    and two.equal(two.vertical(two.identity_cell(ca.target),
                                               ca), ca), w))
                checks.append(Check(
                    'vertical_inverse',
                    two.equal(two.vertical(two.vertical_inverse(ca), ca),
                              two.identity_cell(f)), w))
                checks.append(Check(
                    'horizontal_unit',
                    two.equal(two.horizontal(ca, one_x), ca)
                    and two.equal(two.horizontal(
                        two.identity_cell(c.identity(c.target(f))), ca),
                        ca), w))
                checks.append(Check(
                    'horizontal_inverse',
                    two.equal(two.horizontal(two.horizontal_inverse(ca), ca),
                              one_x), w))
                for ib, b in enumerate(cells):
                    cb = two.cell(ca.target, b)
                    for ic, cc in enumerate(cells):
                        cc_ = two.cell(cb.target, cc)
                        lhs = two.vertical(cc_, two.vertical(cb, ca))
                        rhs = two.vertical(two.vertical(cc_, cb), ca)
                        checks.append(Check('vertical_associativity',
                                            two.equal(lhs, rhs),
                                            w + (ib, ic)))

                y = c.target(f)
                ycells = _take(c.cells(y), max_cells)
                for jg, g in enumerate(_take(c.arrows_from(y), max_arrows)):
                    for ib, b1 in enumerate(cells):
                        cb1 = two.cell(ca.target, b1)
                        for ia2, a2 in enumerate(ycells):
                            ca2 = two.cell(g, a2)
                            for ib2, b2 in enumerate(ycells):
                                cb2 = two.cell(ca2.target, b2)
                                lhs = two.horizontal(two.vertical(cb2, ca2),
                                                     two.vertical(cb1, ca))
                                rhs = two.vertical(two.horizontal(cb2, cb1),
                                                   two.horizontal(ca2, ca))
                                checks.append(Check(
                                    'exchange_law', two.equal(lhs, rhs),
                                    w + (jg, ib, ia2, ib2)))
                    z = c.target(g)
                    zcells = _take(c.cells(z), 1)
                    for jh, h in enumerate(_take(c.arrows_from(z), 1)):
                        for ia3, a3 in enumerate(zcells):
                            ca2 = two.cell(g, ycells[0]) if ycells else \
                                two.identity_cell(g)
                            ca3 = two.cell(h, a3)
                            lhs = two.horizontal(ca3,
                                                 two.horizontal(ca2, ca))
                            rhs = two.horizontal(two.horizontal(ca3, ca2),
                                                 ca)
                            checks.append(Check(
                                'horizontal_associativity',
                                two.equal(lhs, rhs), w + (jg, jh, ia3)))
        return checks

    report = Report('2-groupoid axioms')
    report.extend(_witnessed(run_checks(object_checks, range(len(objects)))))
    return report


def reconstruction_report(crossed, max_cells=3):
    """Compare ``D`` and ``twist`` with those recovered from the
    2-groupoid."""
    two = TwoGroupoid(crossed)
    rebuilt = two.to_crossed()
    report = Report('crossed groupoid reconstruction')
    for ix, x in enumerate(crossed.objects()):
        one = crossed.identity(x)
        for ia, a in enumerate(_take(crossed.cells(x), max_cells)):
            cell = two.cell(one, a)
            report.add('feedback',
                       crossed.arrows_equal(rebuilt.feedback(cell),
                                            crossed.feedback(a)), (ix, ia))
            for jf, f in enumerate(_take(crossed.arrows_from(x), 2)):
                twisted = rebuilt.twist(f, cell)
                report.add('twist',
                           crossed.n_equal(twisted.cell, crossed.twist(f, a))
                           and crossed.arrows_equal(
                               twisted.source,
                               crossed.identity(crossed.target(f))),
                           (ix, ia, jf))
    return report
