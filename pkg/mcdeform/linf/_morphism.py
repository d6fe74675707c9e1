import logging
from fractions import Fraction
from itertools import product

from ..base import Check, Report, run_checks
from ..core import QMatrix, as_rational, solve
from ..dgla import DGLAMorphism, DGLieAlgebra
from ..exceptions import (AxiomError, ContextMismatchError, DegreeError,
                          DimensionError, PreconditionError)
from ..options import OPTIONS
from ._bar import (BarCoderivation, _add_to, koszul_sort, permutation_sign,
                   shifted_parity, sym_basis)


logger = logging.getLogger(__name__)


def set_partitions(n):
    """Partitions of ``range(n)`` into blocks ordered by their minimum."""
    if n == 0:
        yield []
        return
    for partition in set_partitions(n - 1):
        for k in range(len(partition)):
            yield partition[:k] + [partition[k] + [n - 1]] + \
                partition[k + 1:]
        yield partition + [[n - 1]]


class LInfMorphism:
    """L-infinity morphism between DG Lie algebras.

    Parameters
    ----------
    source, target : DGLieAlgebra
    taylor : dict
        ``{j: {(x_1, ..., x_j): {y: c}}}``: the Taylor coefficient
        ``phi_j(x_1, ..., x_j) = sum c y`` of degree ``1 - j``. Inputs may
        be listed in any order; they are sorted with their Koszul sign.
    horizon : int, optional
        Coefficients are known (missing ones are zero) up to this order,
        and the morphism is validated up to this weight. Defaults to
        ``max(orders given, OPTIONS['default_order'])``.
    check : bool, optional
        Run :func:`validate_linf` at the horizon (defaults to
        ``OPTIONS['check_axioms']``).

    Notes
    -----
    Coefficients are those of the coalgebra morphism
    ``F_j(s x_1 ... s x_j) = s phi_j(x_1, ..., x_j)`` of the symmetric
    coalgebras on the shifted spaces, so ``phi_j`` carries the Koszul
    symmetry of ``Sym(g[1])``.

    """

    def __init__(self, source, target, taylor, horizon=None, check=None):
        self.source = source
        self.target = target
        sspace, tspace = source.space, target.space

        self._taylor = {}
        for j, entries in taylor.items():
            j = int(j)
            if j < 1:
                raise DegreeError("Taylor coefficients start at order 1")
            table = {}
            for names, image in entries.items():
                names = (names,) if isinstance(names, str) else tuple(names)
                if len(names) != j:
                    raise DimensionError("order {} coefficient given on {} "
                                         "inputs".format(j, len(names)))
                indices = [sspace.index(n) for n in names]
                sign, canon = koszul_sort(sspace, indices)
                degree = sum(sspace.degree(i) for i in indices) + 1 - j
                vec = table.setdefault(canon, {})
                for y, c in image.items():
                    k = tspace.index(y)
                    c = as_rational(c)
                    if not c:
                        continue
                    if tspace.degree(k) != degree:
                        raise DegreeError("phi_{}{} has a component along {} "
                                          "of the wrong degree"
                                          .format(j, names, y))
                    if not sign:
                        raise DegreeError("phi_{} on {} must vanish: an odd "
                                          "shifted input repeats"
                                          .format(j, names))
                    _add_to(vec, k, sign * c)
                if not vec:
                    del table[canon]
            if table:
                self._taylor[j] = table

        self.max_order = max(self._taylor, default=1)
        if horizon is None:
            horizon = max(self.max_order, OPTIONS['default_order'])
        if horizon < self.max_order:
            raise PreconditionError("horizon {} lies below the highest "
                                    "given order {}".format(horizon,
                                                            self.max_order))
        self.horizon = horizon

        if check is None:
            check = OPTIONS['check_axioms']
        if check:
            report = validate_linf(self, horizon)
            if not report:
                raise AxiomError("invalid L-infinity morphism: {}".format(
                    ', '.join(report.failed_names())), report)

    def __repr__(self):
        return '<LInfMorphism {!r} -> {!r}, orders {}, horizon {}>'.format(
            self.source, self.target, sorted(self._taylor), self.horizon)

    def __eq__(self, other):
        if not isinstance(other, LInfMorphism):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self._taylor == other._taylor)

    def __hash__(self):
        return hash((self.source, self.target, tuple(sorted(self._taylor))))

    @classmethod
    def from_dgla_morphism(cls, phi, horizon=None):
        """The strict L-infinity morphism with ``phi_1 = phi``."""
        name = phi.source.space.name
        tname = phi.target.space.name
        first = {}
        for i in range(len(phi.source.space)):
            image = phi.basis_image(i)
            if image:
                first[(name(i),)] = {tname(k): c for k, c in image.items()}
        return cls(phi.source, phi.target, {1: first}, horizon, check=False)

    @classmethod
    def identity(cls, g, horizon=None):
        return cls.from_dgla_morphism(DGLAMorphism.identity(g), horizon)

    @property
    def is_strict(self):
        return all(j == 1 for j in self._taylor)

    @property
    def orders(self):
        return sorted(self._taylor)

    def strict_part(self):
        """``phi_1`` as a :class:`~mcdeform.dgla.DGLAMorphism`.

        The bracket is not checked: ``phi_1`` is only a chain map unless
        the morphism is strict.
        """
        images = {}
        name = self.source.space.name
        tname = self.target.space.name
        for (i,), vec in self._taylor.get(1, {}).items():
            images[name(i)] = {tname(k): c for k, c in vec.items()}
        return DGLAMorphism.from_images(self.source, self.target, images,
                                        check=False)

    def component(self, j):
        """Order ``j`` coefficient as ``{(x_1, ..., x_j): {y: c}}``."""
        name = self.source.space.name
        tname = self.target.space.name
        return {tuple(name(i) for i in word):
                {tname(k): c for k, c in vec.items()}
                for word, vec in sorted(self._taylor.get(j, {}).items())}

    @property
    def taylor(self):
        return {j: self.component(j) for j in self.orders}

    def evaluate(self, indices):
        """``phi_j`` on basis indices in any order, as ``{index: c}``."""
        sign, canon = koszul_sort(self.source.space, indices)
        if not sign:
            return {}
        vec = self._taylor.get(len(canon), {}).get(canon)
        if not vec:
            return {}
        return {k: sign * c for k, c in vec.items()}


def coalgebra_image(phi, word, blocks=None):
    """Image of a canonical monomial under the induced coalgebra map.

    ``Psi(s x_1 ... s x_n)`` sums, over set partitions of the inputs,
    the product of ``F`` evaluated on each block with the Koszul sign of
    the reordering. ``blocks`` restricts to partitions with that many
    blocks (the weight of the output).

    """
    sspace, tspace = phi.source.space, phi.target.space
    parities = [shifted_parity(sspace, i) for i in word]
    out = {}
    for partition in set_partitions(len(word)):
        if blocks is not None and len(partition) != blocks:
            continue
        vectors = [phi.evaluate([word[p] for p in block])
                   for block in partition]
        if not all(vectors):
            continue
        sign = permutation_sign(parities, [p for b in partition for p in b])
        for choice in product(*[list(v.items()) for v in vectors]):
            coef = Fraction(sign)
            for _, c in choice:
                coef *= c
            s, canon = koszul_sort(tspace, [k for k, _ in choice])
            if s:
                _add_to(out, canon, s * coef)
    return out


def _corestriction(phi, terms):
    """``F`` applied to ``{canonical word: c}``."""
    out = {}
    for word, c in terms.items():
        for k, v in phi.evaluate(word).items():
            _add_to(out, k, c * v)
    return out


def _relation_defect(phi, word, qs, qt):
    """Weight one part of ``Q_h Psi - Psi Q_g`` on a monomial."""
    lhs = _corestriction(phi, qs.apply_word(word))
    rhs = {}
    for k, c in phi.evaluate(word).items():
        for j, v in qt.q1(k).items():
            _add_to(rhs, j, c * v)
    for pair, c in coalgebra_image(phi, word, blocks=2).items():
        for j, v in qt.q2(*pair).items():
            _add_to(rhs, j, c * v)
    for k, v in lhs.items():
        _add_to(rhs, k, -v)
    return rhs


def validate_linf(phi, weight=None):
    """Check ``Q_h o Psi = Psi o Q_g`` on ``Sym^(<= weight)(g[1])``.

    Both sides are coderivations along ``Psi``, so comparing their
    corestrictions on every basis monomial is enough.

    Returns
    -------
    report : :class:`~mcdeform.base.Report`
        One check ``weight j`` per weight, with the first failing monomial
        (names of its factors) as witness.

    Raises
    ------
    PreconditionError
        If ``weight`` exceeds the horizon of ``phi``.

    """
    if weight is None:
        weight = phi.horizon
    if weight > phi.horizon:
        raise PreconditionError("cannot validate at weight {} beyond the "
                                "horizon {}".format(weight, phi.horizon))
    qs = BarCoderivation(phi.source, weight)
    qt = BarCoderivation(phi.target, weight)
    name = phi.source.space.name

    def weight_checks(w):
        for word in sym_basis(phi.source.space, w):
            if _relation_defect(phi, word, qs, qt):
                return [Check('weight {}'.format(w), False,
                              tuple(name(i) for i in word))]
        return [Check('weight {}'.format(w), True)]

    report = Report('L-infinity morphism')
    report.extend(run_checks(weight_checks, range(1, weight + 1)))
    if not report:
        logger.debug("L-infinity validation failed at %s",
                     report.first_failure().witness)
    return report


def compose_linf(phi, xi, weight=None):
    """The composite ``xi o phi`` up to order ``weight``.

    Coefficients are the corestriction of ``Psi_xi o Psi_phi``; orders
    above ``weight`` are not computed.
    """
    if phi.target != xi.source:
        raise ContextMismatchError("L-infinity morphisms are not composable")
    if weight is None:
        weight = min(phi.horizon, xi.horizon)
    name = phi.source.space.name
    tname = xi.target.space.name
    taylor = {}
    for n in range(1, weight + 1):
        table = {}
        for word in sym_basis(phi.source.space, n):
            vec = _corestriction(xi, coalgebra_image(phi, word))
            if vec:
                table[tuple(name(i) for i in word)] = {
                    tname(k): c for k, c in vec.items()}
        if table:
            taylor[n] = table
    return LInfMorphism(phi.source, xi.target, taylor, horizon=weight,
                        check=False)


def correct_weight_two(source, target, first, check=True):
    """Solve the weight two relation for ``phi_2`` given a chain map.

    Parameters
    ----------
    source, target : DGLieAlgebra
    first : dict
        ``{x: {y: c}}``, the chain map ``phi_1``.

    Returns
    -------
    LInfMorphism or None
        ``(phi_1, phi_2)`` with horizon 2, or ``None`` if the bracket
        defect of ``phi_1`` is not a boundary in the required sense.

    """
    partial = LInfMorphism(source, target,
                           {1: {(x,): img for x, img in first.items()}},
                           horizon=1, check=check)
    sspace, tspace = source.space, target.space
    qs, qt = BarCoderivation(source, 2), BarCoderivation(target, 2)
    monomials = sym_basis(sspace, 2)

    unknowns = []
    for m in monomials:
        degree = sum(sspace.degree(i) for i in m) - 1
        for k in tspace.indices(degree):
            unknowns.append((m, k))
    rows = [(m, k) for m in monomials for k in range(len(tspace))]
    row_index = {r: p for p, r in enumerate(rows)}

    images = {m: {w: c for w, c in qs.apply_word(m).items() if len(w) == 2}
              for m in monomials}
    columns = []
    for m0, k0 in unknowns:
        col = [Fraction(0)] * len(rows)
        for m in monomials:
            c = images[m].get(m0)
            if c:
                col[row_index[(m, k0)]] += c
        for j, v in qt.q1(k0).items():
            col[row_index[(m0, j)]] -= v
        columns.append(col)

    rhs = [Fraction(0)] * len(rows)
    for m in monomials:
        for k, c in _relation_defect(partial, m, qs, qt).items():
            rhs[row_index[(m, k)]] = c

    if not unknowns:
        if any(rhs):
            return None
        values = ()
    else:
        values = solve(QMatrix.from_columns(columns, len(rows)), rhs)
        if values is None:
            logger.debug("no weight two correction exists")
            return None

    name, tname = sspace.name, tspace.name
    second = {}
    for (m, k), c in zip(unknowns, values):
        if c:
            second.setdefault(tuple(name(i) for i in m), {})[tname(k)] = c
    taylor = {1: {(x,): img for x, img in first.items()}}
    if second:
        taylor[2] = second
    return LInfMorphism(source, target, taylor, horizon=2, check=check)


def _degree_label(k):
    return 'm{}'.format(-k) if k < 0 else str(k)


def _extend_by_cones(g, degrees):
    """``g x C`` with ``C`` abelian and central, spanned by pairs
    ``c<k>, dc<k>`` (degrees ``k``, ``k + 1``) with ``d c<k> = dc<k>``.

    Returns the algebra and ``{k: name of c<k>}``; the prefix is
    lengthened until no name clashes with ``g``.
    """
    taken = set(g.space.names)
    prefix = 'c'
    while any(prefix + _degree_label(k) in taken or
              'd' + prefix + _degree_label(k) in taken for k in degrees):
        prefix += 'c'

    space = {d: list(g.space.basis(d)) for d in g.space.degrees}
    differential = g.differential
    cones = {}
    for k in sorted(degrees):
        c = prefix + _degree_label(k)
        space.setdefault(k, []).append(c)
        space.setdefault(k + 1, []).append('d' + c)
        differential[c] = {'d' + c: 1}
        cones[k] = c
    target = DGLieAlgebra(space, differential, g.bracket_entries,
                          name='{}_cones'.format(g.name or 'dgla'),
                          check=False)
    return target, cones


def homotopy_extension(source, homotopy, horizon=None, check=None):
    """L-infinity quasi-isomorphism ``g -> g x C`` induced by a homotopy.

    Parameters
    ----------
    source : DGLieAlgebra
    homotopy : dict
        ``{(x_1, ..., x_j): c}``: a map ``K: Sym(g[1]) -> C[1]`` of degree
        ``-1`` with ``K(x_1, ..., x_j) = c c<k>``, ``k = sum |x_i| - j``.
        Inputs may be listed in any order.
    horizon, check
        As for :class:`LInfMorphism`.

    Returns
    -------
    LInfMorphism
        ``phi = (id, F)`` with ``F = q_C K + K Q_g``. ``C`` is the
        contractible abelian summand with one pair ``c<k>, dc<k>`` per
        degree ``k`` reached by ``K``, so ``q_C F = F Q_g`` and ``phi`` is
        a quasi-isomorphism. Coefficients vanish above one plus the
        highest weight of ``K``.

    """
    sspace = source.space
    words = {}
    for names, c in homotopy.items():
        names = (names,) if isinstance(names, str) else tuple(names)
        c = as_rational(c)
        sign, canon = koszul_sort(sspace, [sspace.index(n) for n in names])
        if not c:
            continue
        if not sign:
            raise DegreeError("K on {} must vanish: an odd shifted input "
                              "repeats".format(names))
        words[canon] = words.get(canon, 0) + sign * c
    words = {w: c for w, c in words.items() if c}

    degrees = {sum(sspace.degree(i) for i in w) - len(w) for w in words}
    target, cones = _extend_by_cones(source, degrees)
    tspace = target.space
    kmap = {}
    for w, c in words.items():
        k = sum(sspace.degree(i) for i in w) - len(w)
        kmap[w] = {tspace.index(cones[k]): c}

    qs, qt = BarCoderivation(source), BarCoderivation(target)

    def apply_k(terms):
        out = {}
        for w, c in terms.items():
            for k, v in kmap.get(w, {}).items():
                _add_to(out, k, c * v)
        return out

    top = max((len(w) for w in kmap), default=0) + 1
    name, tname = sspace.name, tspace.name
    taylor = {}
    for n in range(1, top + 1):
        table = {}
        for word in sym_basis(sspace, n):
            vec = apply_k(qs.apply_word(word))
            for k, c in kmap.get(word, {}).items():
                for j, v in qt.q1(k).items():
                    _add_to(vec, j, c * v)
            if n == 1:
                _add_to(vec, tspace.index(name(word[0])), 1)
            if vec:
                table[tuple(name(i) for i in word)] = {
                    tname(k): c for k, c in vec.items()}
        if table:
            taylor[n] = table
    logger.debug("homotopy_extension: %d cone pairs, orders %s",
                 len(cones), sorted(taylor))
    return LInfMorphism(source, target, taylor, horizon=horizon, check=check)
