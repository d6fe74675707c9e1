from fractions import Fraction
from functools import lru_cache

from ..core import SeriesElement, TruncationContext, as_rational
from ..exceptions import ContextMismatchError, DegreeError


class NilElement:
    """Homogeneous element of ``m (x) g^degree``.

    Stored sparsely as ``{(basis index, monomial): Fraction}``. Instances
    are immutable and support ``+``, ``-`` and multiplication by
    rationals.

    """

    __slots__ = ('ambient', 'degree', '_terms')

    def __init__(self, ambient, degree, terms):
        self.ambient = ambient
        self.degree = degree
        self._terms = terms

    def __repr__(self):
        return 'NilElement(degree={}, {})'.format(self.degree,
                                                  self.ambient.format(self))

    @property
    def terms(self):
        return dict(self._terms)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, NilElement):
            return NotImplemented
        return (self.degree == other.degree and self._terms == other._terms
                and self.ambient == other.ambient)

    def __hash__(self):
        return hash((self.degree, frozenset(self._terms.items())))

    def _check(self, other):
        if not isinstance(other, NilElement):
            raise TypeError("expected a NilElement, got {!r}".format(other))
        if other.ambient is not self.ambient and other.ambient != \
                self.ambient:
            raise ContextMismatchError("elements live in different ambients")
        if other.degree != self.degree:
            raise DegreeError("cannot add elements of degrees {} and {}"
                              .format(self.degree, other.degree))

    def __add__(self, other):
        self._check(other)
        terms = dict(self._terms)
        for key, c in other._terms.items():
            v = terms.get(key, 0) + c
            if v:
                terms[key] = v
            else:
                terms.pop(key, None)
        return NilElement(self.ambient, self.degree, terms)

    def __neg__(self):
        return NilElement(self.ambient, self.degree,
                          {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, NilElement):
            return NotImplemented
        scalar = as_rational(scalar)
        if not scalar:
            return NilElement(self.ambient, self.degree, {})
        return NilElement(self.ambient, self.degree,
                          {k: c * scalar for k, c in self._terms.items()})

    __rmul__ = __mul__

    def coefficient(self, name):
        """The coefficient of a basis vector, as a series in ``m``."""
        i = self.ambient.base.space.index(name)
        return SeriesElement(self.ambient.context,
                             {m: c for (j, m), c in self._terms.items()
                              if j == i})

    @property
    def valuation(self):
        """Lowest total degree in the parameters (``None`` for zero)."""
        if not self._terms:
            return None
        return min(sum(m) for _, m in self._terms)

    def layer(self, j):
        return NilElement(self.ambient, self.degree,
                          {k: c for k, c in self._terms.items()
                           if sum(k[1]) == j})

    def truncate(self, j):
        """Canonical representative modulo ``m^(j+1)``, same ambient."""
        return NilElement(self.ambient, self.degree,
                          {k: c for k, c in self._terms.items()
                           if sum(k[1]) <= j})

    def bracket(self, other):
        return self.ambient.bracket(self, other)

    def d(self):
        return self.ambient.d(self)


@lru_cache(maxsize=256)
def _nilpotent(base, num_params, order):
    return NilpotentDGLA(base, TruncationContext(num_params, order))


class NilpotentDGLA:
    """The nilpotent DG Lie algebra ``m (x) g``.

    Parameters
    ----------
    base : DGLieAlgebra
    context : TruncationContext

    Notes
    -----
    Flat coordinates of ``m (x) g^i`` run over monomials (in the order of
    ``context.monomials``) and then over the basis of ``g^i``, so each
    layer ``n_j (x) g^i`` is a contiguous block and lower orders form a
    prefix.

    """

    def __init__(self, base, context):
        self.base = base
        self.context = context

    def __repr__(self):
        return '<NilpotentDGLA {!r} (x) {!r}>'.format(self.context,
                                                     self.base)

    def __eq__(self, other):
        if not isinstance(other, NilpotentDGLA):
            return NotImplemented
        return (self is other or (self.context == other.context
                                  and self.base == other.base))

    def __hash__(self):
        return hash((self.base, self.context))

    @property
    def order(self):
        return self.context.order

    def check_same(self, other):
        if self is not other and self != other:
            raise ContextMismatchError("elements live in different ambients")

    # construction

    def zero(self, degree):
        return NilElement(self, degree, {})

    def element(self, degree, terms):
        """Build an element from ``{(name, exponents): c}``."""
        space = self.base.space
        out = {}
        for (name, mono), c in dict(terms).items():
            i = space.index(name)
            if space.degree(i) != degree:
                raise DegreeError("basis vector {!r} has degree {}, not {}"
                                  .format(name, space.degree(i), degree))
            mono = self.context.check_monomial(mono)
            c = as_rational(c)
            v = out.get((i, mono), 0) + c
            if v:
                out[(i, mono)] = v
            else:
                out.pop((i, mono), None)
        return NilElement(self, degree, out)

    def from_series(self, degree, coefficients):
        """Build an element from ``{name: SeriesElement}``."""
        terms = {}
        for name, series in coefficients.items():
            for mono, c in series.coefficients.items():
                terms[(name, mono)] = c
        return self.element(degree, terms)

    def scale_series(self, series, x):
        """Multiplication by an element of ``R``."""
        self.context.check_same(series.context)
        out = {}
        for (i, m), c in x._terms.items():
            for m2, c2 in series.coefficients.items():
                mono = self.context.multiply(m, m2)
                if mono is None:
                    continue
                v = out.get((i, mono), 0) + c * c2
                if v:
                    out[(i, mono)] = v
                else:
                    out.pop((i, mono), None)
        return NilElement(self, x.degree, out)

    # structure

    def bracket(self, x, y):
        self.check_same(x.ambient)
        self.check_same(y.ambient)
        ctx, base = self.context, self.base
        out = {}
        for (i, m1), a in x._terms.items():
            for (j, m2), b in y._terms.items():
                image = base.bracket_basis(i, j)
                if not image:
                    continue
                mono = ctx.multiply(m1, m2)
                if mono is None:
                    continue
                ab = a * b
                for k, c in image.items():
                    v = out.get((k, mono), 0) + ab * c
                    if v:
                        out[(k, mono)] = v
                    else:
                        out.pop((k, mono), None)
        return NilElement(self, x.degree + y.degree, out)

    def d(self, x):
        self.check_same(x.ambient)
        base = self.base
        out = {}
        for (i, m), a in x._terms.items():
            for j, c in base.d_basis(i).items():
                v = out.get((j, m), 0) + a * c
                if v:
                    out[(j, m)] = v
                else:
                    out.pop((j, m), None)
        return NilElement(self, x.degree + 1, out)

    def ad(self, x):
        return lambda y: self.bracket(x, y)

    def apply_morphism(self, phi, x, target=None):
        """``(1 (x) phi)(x)`` in ``m (x) phi.target``."""
        if phi.source != self.base:
            raise ContextMismatchError("morphism source differs from the "
                                       "base algebra")
        if target is None:
            target = tensor_with_m(phi.target, self.context)
        out = {}
        for (i, m), a in x._terms.items():
            for j, c in phi.basis_image(i).items():
                v = out.get((j, m), 0) + a * c
                if v:
                    out[(j, m)] = v
                else:
                    out.pop((j, m), None)
        return NilElement(target, x.degree, out)

    # orders

    def at_order(self, j):
        """The same algebra truncated at order ``j``."""
        return _nilpotent(self.base, self.context.num_params, j)

    def reduce(self, x, j):
        """Image of ``x`` in ``at_order(j)``."""
        target = self.at_order(j)
        return NilElement(target, x.degree,
                          {k: c for k, c in x._terms.items()
                           if sum(k[1]) <= j})

    def embed(self, x):
        """Canonical representative in ``self`` of an element of a lower
        order ambient."""
        if x.ambient.base != self.base or \
                x.ambient.order > self.order:
            raise ContextMismatchError("cannot embed from {!r}"
                                       .format(x.ambient))
        return NilElement(self, x.degree, dict(x._terms))

    # coordinates

    def dim(self, degree):
        return self.context.dim * self.base.space.dim(degree)

    def coordinates(self, x):
        """Flat Q-coordinates of ``x``."""
        self.check_same(x.ambient)
        space = self.base.space
        dim = space.dim(x.degree)
        v = [Fraction(0)] * (self.context.dim * dim)
        for (i, m), c in x._terms.items():
            v[self.context.index(m) * dim + space.local_index(i)] = c
        return tuple(v)

    def from_coordinates(self, degree, vector):
        space = self.base.space
        indices = space.indices(degree)
        dim = len(indices)
        if len(vector) != self.context.dim * dim:
            raise DegreeError("coordinate vector has the wrong length")
        terms = {}
        for pos, c in enumerate(vector):
            if c:
                m = self.context.monomials[pos // dim]
                terms[(indices[pos % dim], m)] = as_rational(c)
        return NilElement(self, degree, terms)

    def layer_coordinates(self, x, j):
        """Coordinates of the order ``j`` layer ``n_j (x) g^i``."""
        dim = self.base.space.dim(x.degree)
        sl = self.context.layer_slice(j)
        return self.coordinates(x)[sl.start * dim:sl.stop * dim]

    def from_layer_coordinates(self, degree, j, vector):
        dim = self.base.space.dim(degree)
        sl = self.context.layer_slice(j)
        full = [Fraction(0)] * (self.context.dim * dim)
        full[sl.start * dim:sl.stop * dim] = list(vector)
        return self.from_coordinates(degree, full)

    def basis_elements(self, degree):
        """Q-basis of ``m (x) g^degree`` in flat coordinate order."""
        return [NilElement(self, degree, {(i, m): Fraction(1)})
                for m in self.context.monomials
                for i in self.base.space.indices(degree)]

    def linear_map_matrix(self, func, degree_in, degree_out):
        """Matrix of a Q-linear map ``m (x) g^in -> m (x) g^out``."""
        from ..core import QMatrix

        columns = [self.coordinates(func(b))
                   for b in self.basis_elements(degree_in)]
        return QMatrix.from_columns(columns, self.dim(degree_out)) \
            if columns else QMatrix.zeros(self.dim(degree_out), 0)

    def format(self, x):
        from ..core import format_monomial

        if not x._terms:
            return '0'
        name = self.base.space.name
        parts = []
        for m in self.context.monomials:
            for i in self.base.space.indices(x.degree):
                c = x._terms.get((i, m))
                if c:
                    parts.append('{}*{}*{}'.format(c, format_monomial(m),
                                                   name(i)))
        return ' + '.join(parts)


def tensor_with_m(g, context):
    """The nilpotent DG Lie algebra ``m (x) g`` for a truncation context."""
    return _nilpotent(g, context.num_params, context.order)
