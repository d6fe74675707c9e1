from fractions import Fraction

from ._scalars import as_rational


class TPoly:
    """Polynomial in ``t`` with coefficients in a Q-vector space.

    Coefficients may be Fractions or any immutable type supporting
    ``+``, ``-`` and multiplication by a Fraction (e.g.
    :class:`~mcdeform.dgla.NilElement`). ``zero`` is the zero
    coefficient; trailing zero coefficients are dropped.

    """

    def __init__(self, coefficients, zero=Fraction(0)):
        coeffs = list(coefficients)
        while coeffs and coeffs[-1] == zero:
            coeffs.pop()
        self.coefficients = tuple(coeffs)
        self.zero = zero

    def __repr__(self):
        return 'TPoly({!r})'.format(list(self.coefficients))

    def __eq__(self, other):
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    @property
    def degree(self):
        """Degree in ``t`` (``-1`` for the zero polynomial)."""
        return len(self.coefficients) - 1

    def is_zero(self):
        return not self.coefficients

    def coefficient(self, i):
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return self.zero

    def __add__(self, other):
        n = max(len(self.coefficients), len(other.coefficients))
        return TPoly([self.coefficient(i) + other.coefficient(i)
                      for i in range(n)], self.zero)

    def __neg__(self):
        return TPoly([-c for c in self.coefficients], self.zero)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        scalar = as_rational(scalar)
        return TPoly([c * scalar for c in self.coefficients], self.zero)

    def map(self, func, zero=None):
        """Apply a linear map coefficientwise."""
        zero = self.zero if zero is None else zero
        return TPoly([func(c) for c in self.coefficients], zero)

    def combine(self, other, op, zero):
        """Product ``sum_{i,j} t^(i+j) op(a_i, b_j)`` for a bilinear ``op``."""
        if self.is_zero() or other.is_zero():
            return TPoly([], zero)
        result = [zero] * (len(self.coefficients) + len(other.coefficients)
                           - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                result[i + j] = result[i + j] + op(a, b)
        return TPoly(result, zero)

    def evaluate(self, value):
        value = as_rational(value)
        result = self.zero
        for c in reversed(self.coefficients):
            result = result * value + c
        return result

    def derivative(self):
        return TPoly([c * i for i, c in enumerate(self.coefficients)][1:],
                     self.zero)

    def integrate(self):
        return poly_integrate(self)


def poly_integrate(poly):
    """Antiderivative with zero constant term.

    Accepts a :class:`TPoly` or a plain sequence of coefficients.

    Examples
    --------
    >>> poly_integrate(TPoly([0, 0, 3])).coefficients
    (Fraction(0, 1), Fraction(0, 1), Fraction(0, 1), Fraction(1, 1))

    """
    if not isinstance(poly, TPoly):
        poly = TPoly([as_rational(c) for c in poly])
    coeffs = [poly.zero] + [c * Fraction(1, i + 1)
                            for i, c in enumerate(poly.coefficients)]
    return TPoly(coeffs, poly.zero)


def interpolate(points, values, zero=Fraction(0)):
    """Lagrange interpolation through ``(points[i], values[i])``.

    Values may live in any coefficient space (see :class:`TPoly`).

    """
    points = [as_rational(p) for p in points]
    if len(points) != len(values):
        raise ValueError("points and values differ in length")
    if len(set(points)) != len(points):
        raise ValueError("interpolation points must be distinct")

    n = len(points)
    result = [zero] * n
    for i, (xi, yi) in enumerate(zip(points, values)):
        # scalar Lagrange basis polynomial, lowest degree first
        basis = [Fraction(1)]
        denom = Fraction(1)
        for k, xk in enumerate(points):
            if k == i:
                continue
            basis = [-xk * basis[0]] + [
                basis[m - 1] - xk * basis[m] for m in range(1, len(basis))
            ] + [basis[-1]]
            denom *= xi - xk
        for m, b in enumerate(basis):
            if b:
                result[m] = result[m] + yi * (b / denom)
    return TPoly(result, zero)


class PolyForm:
    """Polynomial differential form ``f(t) + g(t) dt`` on the interval.

    ``even_part`` and ``odd_part`` are :class:`TPoly` over the same
    coefficient space.

    """

    def __init__(self, even_part, odd_part):
        self.even_part = even_part
        self.odd_part = odd_part

    def __repr__(self):
        return 'PolyForm({!r}, {!r} dt)'.format(self.even_part,
                                                  self.odd_part)

    def __eq__(self, other):
        if not isinstance(other, PolyForm):
            return NotImplemented
        return (self.even_part == other.even_part
                and self.odd_part == other.odd_part)

    def de_rham(self):
        """Exterior derivative in ``t``: ``d(f + g dt) = f' dt``."""
        return PolyForm(TPoly([], self.even_part.zero),
                        self.even_part.derivative())

    def evaluate(self, value):
        """Pull back along the point ``t = value`` (``dt`` is killed)."""
        return self.even_part.evaluate(value)
