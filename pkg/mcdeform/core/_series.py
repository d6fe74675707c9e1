from fractions import Fraction
from functools import lru_cache

from ..exceptions import ContextMismatchError, DegreeError, FormatError
from ._scalars import as_rational


def _exponent_vectors(total, num_params):
    """Exponent vectors of the given total degree, lexicographically
    descending."""
    if num_params == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _exponent_vectors(total - first, num_params - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _context(num_params, order):
    return TruncationContext(num_params, order)


class TruncationContext:
    """Truncated parameter algebra ``R = Q[h_1..h_k] / (h_1..h_k)^(N+1)``.

    The maximal ideal ``m`` has a basis of monomials of total degree
    ``1..N``, ordered by total degree then lexicographically descending
    in the exponent vector. Lower orders therefore form a prefix of the
    monomial list.

    Parameters
    ----------
    num_params : int
        Number of formal parameters ``k >= 1``.
    order : int
        Truncation order ``N >= 1``.

    """

    def __init__(self, num_params, order):
        if not isinstance(num_params, int) or num_params < 1:
            raise ValueError("num_params must be a positive integer")
        if not isinstance(order, int) or order < 1:
            raise ValueError("order must be a positive integer")

        self.num_params = num_params
        self.order = order

        self._layers = {
            j: tuple(_exponent_vectors(j, num_params))
            for j in range(1, order + 1)
        }
        self.monomials = tuple(m for j in range(1, order + 1)
                               for m in self._layers[j])
        self._index = {m: i for i, m in enumerate(self.monomials)}

    def __repr__(self):
        return 'TruncationContext(num_params={}, order={})'.format(
            self.num_params, self.order)

    def __eq__(self, other):
        return (isinstance(other, TruncationContext)
                and self.num_params == other.num_params
                and self.order == other.order)

    def __hash__(self):
        return hash(('TruncationContext', self.num_params, self.order))

    @property
    def dim(self):
        """Dimension of the maximal ideal over Q."""
        return len(self.monomials)

    @property
    def unit(self):
        return (0,) * self.num_params

    def layer(self, j):
        """Monomials of total degree exactly ``j``."""
        return self._layers.get(j, ())

    def layer_slice(self, j):
        """Position range of layer ``j`` in :attr:`monomials`."""
        if j < 1 or j > self.order:
            return slice(0, 0)
        start = sum(len(self._layers[i]) for i in range(1, j))
        return slice(start, start + len(self._layers[j]))

    def index(self, monomial):
        try:
            return self._index[monomial]
        except KeyError:
            raise DegreeError("monomial {!r} is not a basis monomial of {!r}"
                              .format(monomial, self))

    def check_monomial(self, monomial, allow_unit=False):
        monomial = tuple(int(e) for e in monomial)
        if len(monomial) != self.num_params:
            raise FormatError("exponent vector {!r} does not have {} entries"
                              .format(list(monomial), self.num_params))
        if any(e < 0 for e in monomial):
            raise FormatError("negative exponent in {!r}".format(monomial))
        total = sum(monomial)
        if total > self.order:
            raise DegreeError("monomial {!r} exceeds truncation order {}"
                              .format(monomial, self.order))
        if total == 0 and not allow_unit:
            raise DegreeError("constant term is not allowed in the "
                              "maximal ideal")
        return monomial

    def multiply(self, m1, m2):
        """Product of two monomials, or ``None`` if it is truncated away."""
        product = tuple(a + b for a, b in zip(m1, m2))
        if sum(product) > self.order:
            return None
        return product

    def at_order(self, j):
        """The context of the same parameters truncated at order ``j``."""
        if not isinstance(j, int) or j < 1:
            raise ValueError("order must be a positive integer")
        return _context(self.num_params, j)

    def check_same(self, other):
        if self != other:
            raise ContextMismatchError("{!r} and {!r} differ"
                                       .format(self, other))

    def param(self, i):
        """The generator ``h_i`` as a :class:`SeriesElement`."""
        if not 0 <= i < self.num_params:
            raise IndexError("parameter index out of range")
        mono = tuple(1 if k == i else 0 for k in range(self.num_params))
        return SeriesElement(self, {mono: 1})

    def zero(self, ideal=True):
        return SeriesElement(self, {}, ideal=ideal)

    def one(self):
        return SeriesElement(self, {self.unit: 1}, ideal=False)


class SeriesElement:
    """An element of ``R`` (or of its maximal ideal when ``ideal`` is set).

    Stored sparsely as a mapping from exponent vectors to Fractions.
    Instances are immutable.

    """

    __slots__ = ('context', 'ideal', '_coefficients')

    def __init__(self, context, coefficients, ideal=True):
        self.context = context
        coeffs = {}
        for mono, c in dict(coefficients).items():
            mono = context.check_monomial(mono, allow_unit=not ideal)
            c = as_rational(c)
            if c:
                coeffs[mono] = coeffs.get(mono, Fraction(0)) + c
        self._coefficients = {m: c for m, c in coeffs.items() if c}
        self.ideal = ideal or context.unit not in self._coefficients

    @classmethod
    def _raw(cls, context, coefficients, ideal):
        obj = object.__new__(cls)
        obj.context = context
        obj._coefficients = coefficients
        obj.ideal = ideal or context.unit not in coefficients
        return obj

    @property
    def coefficients(self):
        return dict(self._coefficients)

    def __getitem__(self, monomial):
        return self._coefficients.get(tuple(monomial), Fraction(0))

    def __repr__(self):
        if not self._coefficients:
            return 'SeriesElement(0)'
        return 'SeriesElement({})'.format(format_series(self))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SeriesElement(self.context, {self.context.unit: other},
                                  ideal=False)
        if not isinstance(other, SeriesElement):
            return NotImplemented
        return (self.context == other.context
                and self._coefficients == other._coefficients)

    def __hash__(self):
        return hash((self.context,
                     frozenset(self._coefficients.items())))

    def is_zero(self):
        return not self._coefficients

    def __bool__(self):
        return bool(self._coefficients)

    def __add__(self, other):
        if not isinstance(other, SeriesElement):
            return NotImplemented
        self.context.check_same(other.context)
        coeffs = dict(self._coefficients)
        for m, c in other._coefficients.items():
            v = coeffs.get(m, Fraction(0)) + c
            if v:
                coeffs[m] = v
            else:
                coeffs.pop(m, None)
        return SeriesElement._raw(self.context, coeffs,
                                  self.ideal and other.ideal)

    def __neg__(self):
        return SeriesElement._raw(
            self.context, {m: -c for m, c in self._coefficients.items()},
            self.ideal)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SeriesElement):
            return series_mul(self, other)
        try:
            scalar = as_rational(other)
        except TypeError:
            return NotImplemented
        if not scalar:
            return SeriesElement._raw(self.context, {}, self.ideal)
        return SeriesElement._raw(
            self.context,
            {m: scalar * c for m, c in self._coefficients.items()},
            self.ideal)

    __rmul__ = __mul__

    @property
    def constant_term(self):
        return self._coefficients.get(self.context.unit, Fraction(0))

    @property
    def valuation(self):
        """Smallest total degree present (``None`` for zero)."""
        if not self._coefficients:
            return None
        return min(sum(m) for m in self._coefficients)

    def layer(self, j):
        """Homogeneous component of total degree ``j``."""
        return SeriesElement._raw(
            self.context,
            {m: c for m, c in self._coefficients.items() if sum(m) == j},
            self.ideal)

    def truncate(self, j):
        """Image in the context truncated at order ``j``."""
        ctx = self.context.at_order(j)
        return SeriesElement._raw(
            ctx,
            {m: c for m, c in self._coefficients.items() if sum(m) <= j},
            self.ideal)

    def inverse(self):
        """Multiplicative inverse of a unit of ``R``."""
        c0 = self.constant_term
        if not c0:
            raise ZeroDivisionError("series with zero constant term "
                                    "is not invertible")
        one = self.context.one()
        # x = c0 (1 - n), n nilpotent: 1/x = (1/c0) sum n^i
        n = one - self * (1 / c0)
        result, power = one, one
        for _ in range(self.context.order):
            power = series_mul(power, n)
            if power.is_zero():
                break
            result = result + power
        return result * (1 / c0)


def series_mul(a, b):
    """Truncated product of two series."""
    a.context.check_same(b.context)
    ctx = a.context
    coeffs = {}
    for m1, c1 in a._coefficients.items():
        for m2, c2 in b._coefficients.items():
            m = ctx.multiply(m1, m2)
            if m is None:
                continue
            v = coeffs.get(m, Fraction(0)) + c1 * c2
            if v:
                coeffs[m] = v
            else:
                coeffs.pop(m, None)
    return SeriesElement._raw(ctx, coeffs, a.ideal or b.ideal)


def format_monomial(monomial):
    parts = []
    for i, e in enumerate(monomial):
        if e == 1:
            parts.append('h{}'.format(i + 1))
        elif e > 1:
            parts.append('h{}^{}'.format(i + 1, e))
    return '*'.join(parts) or '1'


def format_series(series):
    terms = []
    for m in series.context.monomials:
        c = series[m]
        if c:
            terms.append('{}*{}'.format(c, format_monomial(m)))
    c = series.constant_term
    if c:
        terms.insert(0, str(c))
    return ' + '.join(terms) or '0'
