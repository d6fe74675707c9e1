from itertools import combinations

from ..base import Report
from ..core import as_rational
from ..exceptions import AxiomError, DegreeError
from ..options import OPTIONS
from ._dgla import DGLieAlgebra, GradedSpace, _accumulate


UNIT = '1'


class GradedCommutativeDGA:
    """Finite-dimensional unital graded commutative DG algebra over Q.

    The basis must contain the unit ``'1'`` in degree 0; products with
    the unit are implicit.

    Parameters
    ----------
    space : GradedSpace or dict
    product : dict
        ``{(a, b): {c: coefficient}}``. Entries for ``(b, a)`` are derived
        by graded commutativity when not given.
    differential : dict, optional
        ``{a: {b: coefficient}}``.
    check : bool, optional
        Validate associativity, graded commutativity, the Leibniz rule and
        ``d^2 = 0`` (defaults to ``OPTIONS['check_axioms']``).

    """

    def __init__(self, space, product=None, differential=None, check=None):
        if not isinstance(space, GradedSpace):
            space = GradedSpace(space)
        if UNIT not in space.names or space.degree_of(UNIT) != 0:
            raise DegreeError("a DG algebra needs the unit '1' in degree 0")
        self.space = space
        deg = space.degree

        self._d = {}
        for a, image in (differential or {}).items():
            i = space.index(a)
            vec = {}
            for b, c in image.items():
                j = space.index(b)
                if deg(j) != deg(i) + 1:
                    raise DegreeError("d({}) has a component of the wrong "
                                      "degree".format(a))
                _accumulate(vec, {j: as_rational(c)})
            if vec:
                self._d[i] = vec

        self._product = {}
        for (a, b), image in (product or {}).items():
            i, j = space.index(a), space.index(b)
            vec = {}
            for c, q in image.items():
                k = space.index(c)
                if deg(k) != deg(i) + deg(j):
                    raise DegreeError("{}*{} has a component of the wrong "
                                      "degree".format(a, b))
                _accumulate(vec, {k: as_rational(q)})
            self._product[(i, j)] = vec
        for (i, j), vec in list(self._product.items()):
            if (j, i) not in self._product:
                s = -1 if deg(i) * deg(j) % 2 else 1
                self._product[(j, i)] = {k: s * q for k, q in vec.items()}

        if check is None:
            check = OPTIONS['check_axioms']
        if check:
            report = validate_dga(self)
            if not report:
                raise AxiomError("invalid DG algebra: {}".format(
                    ', '.join(report.failed_names())), report)

    def __repr__(self):
        return '<GradedCommutativeDGA {!r}>'.format(self.space)

    @property
    def unit(self):
        return self.space.index(UNIT)

    def multiply_basis(self, i, j):
        u = self.unit
        if i == u:
            return {j: 1}
        if j == u:
            return {i: 1}
        return self._product.get((i, j), {})

    def multiply(self, x, y):
        acc = {}
        for i, a in x.items():
            for j, b in y.items():
                _accumulate(acc, self.multiply_basis(i, j), a * b)
        return acc

    def d_basis(self, i):
        return self._d.get(i, {})

    def d_vector(self, x):
        acc = {}
        for i, a in x.items():
            _accumulate(acc, self.d_basis(i), a)
        return acc

    def tensor(self, other):
        """Graded tensor product of DG algebras."""
        s1, s2 = self.space, other.space

        def label(i, j):
            a, b = s1.name(i), s2.name(j)
            if a == UNIT:
                return b
            if b == UNIT:
                return a
            return '{}.{}'.format(a, b)

        pairs = [(i, j) for i in range(len(s1)) for j in range(len(s2))]
        degrees = {}
        for i, j in pairs:
            degrees.setdefault(s1.degree(i) + s2.degree(j), []).append(
                label(i, j))

        product = {}
        for (i, j) in pairs:
            for (k, l) in pairs:
                if s1.name(i) == UNIT and s2.name(j) == UNIT:
                    continue
                if s1.name(k) == UNIT and s2.name(l) == UNIT:
                    continue
                s = -1 if s2.degree(j) * s1.degree(k) % 2 else 1
                left = self.multiply_basis(i, k)
                right = other.multiply_basis(j, l)
                image = {}
                for p, a in left.items():
                    for q, b in right.items():
                        _accumulate(image, {label(p, q): s * a * b})
                if image:
                    product[(label(i, j), label(k, l))] = image

        differential = {}
        for i, j in pairs:
            image = {}
            for p, a in self.d_basis(i).items():
                _accumulate(image, {label(p, j): a})
            s = -1 if s1.degree(i) % 2 else 1
            for q, b in other.d_basis(j).items():
                _accumulate(image, {label(i, q): s * b})
            if image:
                differential[label(i, j)] = image

        return GradedCommutativeDGA(degrees, product, differential,
                                    check=False)


def validate_dga(a):
    """Check the axioms of a graded commutative DG algebra."""
    space = a.space
    deg = space.degree
    name = space.name
    n = len(space)
    report = Report('DG algebra')

    witness = None
    for i in range(n):
        if a.d_vector(a.d_basis(i)):
            witness = (name(i),)
            break
    report.add('d_squared', witness is None, witness)

    witness = None
    for i, j in combinations(range(n), 2):
        s = -1 if deg(i) * deg(j) % 2 else 1
        lhs = dict(a.multiply_basis(i, j))
        if _accumulate(lhs, a.multiply_basis(j, i), -s):
            witness = (name(i), name(j))
            break
    for i in range(n):
        if witness is None and deg(i) % 2 and a.multiply_basis(i, i):
            witness = (name(i), name(i))
    report.add('commutativity', witness is None, witness)

    witness = None
    for i in range(n):
        for j in range(n):
            ij = a.multiply_basis(i, j)
            for k in range(n):
                lhs = a.multiply(ij, {k: 1})
                rhs = a.multiply({i: 1}, a.multiply_basis(j, k))
                if _accumulate(lhs, rhs, -1):
                    witness = (name(i), name(j), name(k))
                    break
            if witness is not None:
                break
        if witness is not None:
            break
    report.add('associativity', witness is None, witness)

    witness = None
    for i in range(n):
        s = -1 if deg(i) % 2 else 1
        for j in range(n):
            lhs = a.d_vector(a.multiply_basis(i, j))
            rhs = a.multiply(a.d_basis(i), {j: 1})
            _accumulate(rhs, a.multiply({i: 1}, a.d_basis(j)), s)
            if _accumulate(lhs, rhs, -1):
                witness = (name(i), name(j))
                break
        if witness is not None:
            break
    report.add('leibniz', witness is None, witness)
    return report


def exterior_algebra(generators, differential=None):
    """Exterior algebra on odd degree generators.

    Parameters
    ----------
    generators : dict
        ``{name: degree}``; every degree must be odd. Basis monomials are
        named by concatenating generator names in the given order.
    differential : dict, optional
        Differential on monomials, ``{monomial: {monomial: c}}``.

    """
    names = list(generators)
    for g, d in generators.items():
        if d % 2 == 0:
            raise DegreeError("exterior generator {!r} must have odd degree"
                              .format(g))

    subsets = [()]
    for r in range(1, len(names) + 1):
        subsets.extend(combinations(range(len(names)), r))

    def label(subset):
        return ''.join(names[k] for k in subset) or UNIT

    degrees = {}
    for sub in subsets:
        degrees.setdefault(sum(generators[names[k]] for k in sub),
                           []).append(label(sub))

    product = {}
    for s1 in subsets[1:]:
        for s2 in subsets[1:]:
            if set(s1) & set(s2):
                continue
            merged = s1 + s2
            # sign of sorting odd generators
            inversions = sum(1 for x in range(len(merged))
                             for y in range(x + 1, len(merged))
                             if merged[x] > merged[y])
            sign = -1 if inversions % 2 else 1
            product[(label(s1), label(s2))] = {
                label(tuple(sorted(merged))): sign}

    return GradedCommutativeDGA(degrees, product, differential)


def square_zero_extension(degrees, differential=None):
    """``Q (+) V`` with ``V . V = 0``.

    ``degrees`` maps names to degrees. With ``differential={'a': {'b': 1}}``
    and ``|b| = |a| + 1`` this is a contractible augmentation of ``Q``.

    """
    space = {0: [UNIT]}
    for name, d in degrees.items():
        space.setdefault(d, []).append(name)
    return GradedCommutativeDGA(space, {}, differential)


def contractible_unit(a_degree=0):
    """``Q (+) <a, b>`` with ``da = b``, quasi-isomorphic to ``Q``."""
    return square_zero_extension({'a': a_degree, 'b': a_degree + 1},
                                 {'a': {'b': 1}})


def current_algebra(lie, dga, name=None, check=None):
    """Current algebra ``k (x) A`` of a DG Lie algebra and a DG algebra.

    ``[x (x) a, y (x) b] = (-1)^(|a||y|) [x, y] (x) ab`` and
    ``d(x (x) a) = dx (x) a + (-1)^|x| x (x) da``. Basis vectors are named
    ``x`` for ``x (x) 1`` and ``x*a`` otherwise.

    """
    ls, ds = lie.space, dga.space

    def label(i, p):
        x, a = ls.name(i), ds.name(p)
        return x if a == UNIT else '{}*{}'.format(x, a)

    pairs = [(i, p) for i in range(len(ls)) for p in range(len(ds))]
    degrees = {}
    for i, p in pairs:
        degrees.setdefault(ls.degree(i) + ds.degree(p), []).append(
            label(i, p))

    differential = {}
    for i, p in pairs:
        image = {}
        for j, c in lie.d_basis(i).items():
            _accumulate(image, {label(j, p): c})
        s = -1 if ls.degree(i) % 2 else 1
        for q, c in dga.d_basis(p).items():
            _accumulate(image, {label(i, q): s * c})
        if image:
            differential[label(i, p)] = image

    bracket = {}
    for n1, (i, p) in enumerate(pairs):
        for (j, q) in pairs[n1:]:
            lb = lie.bracket_basis(i, j)
            prod = dga.multiply_basis(p, q)
            if not lb or not prod:
                continue
            s = -1 if ds.degree(p) * ls.degree(j) % 2 else 1
            image = {}
            for k, a in lb.items():
                for r, b in prod.items():
                    _accumulate(image, {label(k, r): s * a * b})
            if image:
                bracket[(label(i, p), label(j, q))] = image

    return DGLieAlgebra(degrees, differential, bracket, name=name,
                        check=check)


def lie_algebra(basis, bracket, name=None, check=None):
    """An ordinary Lie algebra, concentrated in degree 0."""
    return DGLieAlgebra({0: list(basis)}, {}, bracket, name=name,
                        check=check)


def abelian_lie_algebra(basis, name=None):
    return lie_algebra(basis, {}, name=name)


def affine_lie_algebra(scale=1):
    """The two-dimensional non-abelian Lie algebra ``[x, y] = c y``."""
    return lie_algebra(['x', 'y'], {('x', 'y'): {'y': scale}},
                       name='affine')


def heisenberg_lie_algebra(scale=1):
    """``[x, y] = c z`` with ``z`` central."""
    return lie_algebra(['x', 'y', 'z'], {('x', 'y'): {'z': scale}},
                       name='heisenberg')


def sl2_lie_algebra():
    return lie_algebra(['e', 'f', 'h'], {
        ('e', 'f'): {'h': 1},
        ('h', 'e'): {'e': 2},
        ('h', 'f'): {'f': -2},
    }, name='sl2')
