from fractions import Fraction

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..exceptions import DimensionError
from ._scalars import as_rational


def _fraction_array(values, shape):
    out = np.empty(shape, dtype=object)
    for idx, v in np.ndenumerate(np.asarray(values, dtype=object)
                                 .reshape(shape)):
        out[idx] = as_rational(v)
    return out


class QMatrix:
    """Dense matrix of exact rationals.

    Entries are held in a numpy object array of
    :class:`fractions.Fraction`. Instances are treated as immutable.

    Parameters
    ----------
    entries : array-like
        Nested sequence (rows of entries) of rationals.
    shape : tuple, optional
        Required when ``entries`` is empty, e.g. a ``3 x 0`` matrix.

    """

    def __init__(self, entries, shape=None):
        if isinstance(entries, QMatrix):
            self._data = entries._data.copy()
            return
        if shape is None:
            arr = np.array(entries, dtype=object)
            if arr.ndim == 1 and arr.size == 0:
                arr = arr.reshape(0, 0)
            if arr.ndim != 2:
                raise DimensionError("QMatrix entries must be 2-dimensional")
            shape = arr.shape
        else:
            arr = np.array(entries, dtype=object)
        self._data = _fraction_array(arr, tuple(shape))

    @classmethod
    def _wrap(cls, data):
        obj = object.__new__(cls)
        obj._data = data
        return obj

    @classmethod
    def zeros(cls, rows, cols):
        data = np.empty((rows, cols), dtype=object)
        data.fill(Fraction(0))
        return cls._wrap(data)

    @classmethod
    def identity(cls, n):
        m = cls.zeros(n, n)
        for i in range(n):
            m._data[i, i] = Fraction(1)
        return m

    @classmethod
    def from_columns(cls, columns, rows):
        """Build a matrix from a list of column vectors of length ``rows``."""
        m = cls.zeros(rows, len(columns))
        for j, col in enumerate(columns):
            if len(col) != rows:
                raise DimensionError("column {} has length {}, expected {}"
                                     .format(j, len(col), rows))
            for i, v in enumerate(col):
                m._data[i, j] = as_rational(v)
        return m

    @property
    def shape(self):
        return self._data.shape

    @property
    def rows(self):
        return self._data.shape[0]

    @property
    def cols(self):
        return self._data.shape[1]

    @property
    def array(self):
        """A copy of the underlying object array."""
        return self._data.copy()

    def __getitem__(self, idx):
        return self._data[idx]

    def __repr__(self):
        return 'QMatrix({})'.format(self.to_strings())

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return (self.shape == other.shape
                and bool(np.all(self._data == other._data)))

    def __hash__(self):
        return hash((self.shape, tuple(self._data.ravel())))

    def is_zero(self):
        return not any(v for v in self._data.ravel())

    def transpose(self):
        return QMatrix._wrap(self._data.T.copy())

    T = property(transpose)

    def column(self, j):
        return tuple(self._data[:, j])

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def row(self, i):
        return tuple(self._data[i, :])

    def __add__(self, other):
        if self.shape != other.shape:
            raise DimensionError("shapes {} and {} differ"
                                 .format(self.shape, other.shape))
        return QMatrix._wrap(self._data + other._data)

    def __sub__(self, other):
        if self.shape != other.shape:
            raise DimensionError("shapes {} and {} differ"
                                 .format(self.shape, other.shape))
        return QMatrix._wrap(self._data - other._data)

    def __neg__(self):
        return QMatrix._wrap(-self._data)

    def scale(self, scalar):
        scalar = as_rational(scalar)
        return QMatrix._wrap(self._data * scalar)

    def __matmul__(self, other):
        if isinstance(other, QMatrix):
            if self.cols != other.rows:
                raise DimensionError("cannot multiply {} by {}"
                                     .format(self.shape, other.shape))
            out = QMatrix.zeros(self.rows, other.cols)
            if self.cols:
                out._data = _fraction_array(self._data.dot(other._data),
                                            (self.rows, other.cols))
            return out
        return self.apply(other)

    def apply(self, vector):
        """Returns ``M v`` as a tuple of Fractions."""
        vector = list(vector)
        if len(vector) != self.cols:
            raise DimensionError("vector of length {} for a matrix of "
                                 "shape {}".format(len(vector), self.shape))
        result = []
        for i in range(self.rows):
            acc = Fraction(0)
            row = self._data[i]
            for j, v in enumerate(vector):
                if v:
                    acc += row[j] * v
            result.append(acc)
        return tuple(result)

    def hstack(self, other):
        if self.rows != other.rows:
            raise DimensionError("cannot stack {} and {}"
                                 .format(self.shape, other.shape))
        return QMatrix._wrap(np.hstack([self._data, other._data]))

    def to_strings(self):
        return [[str(v) for v in row] for row in self._data]

    def inverse(self):
        """Inverse of a square invertible matrix."""
        n = self.rows
        if self.cols != n:
            raise DimensionError("only square matrices can be inverted")
        reduced, pivots = rref(self.hstack(QMatrix.identity(n)))
        if tuple(pivots[:n]) != tuple(range(n)) or len(pivots) > n:
            raise ZeroDivisionError("matrix is singular")
        return QMatrix._wrap(reduced._data[:, n:].copy())


def _to_domain(matrix):
    rows = [[QQ(v.numerator, v.denominator) for v in row]
            for row in matrix._data]
    return DomainMatrix(rows, matrix.shape, QQ)


def _from_domain(value):
    return Fraction(int(value.numerator), int(value.denominator))


def rref(matrix):
    """Reduced row echelon form over Q.

    Returns
    -------
    reduced : QMatrix
        The reduced matrix, same shape as ``matrix``.
    pivots : tuple of int
        Pivot column indices.

    """
    if matrix.rows == 0 or matrix.cols == 0:
        return QMatrix(matrix), ()

    reduced, pivots = _to_domain(matrix).rref()
    entries = [[_from_domain(v) for v in row] for row in reduced.to_list()]
    return QMatrix(entries, shape=matrix.shape), tuple(pivots)


def rank(matrix):
    return len(rref(matrix)[1])


def kernel_basis(matrix):
    """Basis of the kernel, one vector per free column (ascending)."""
    reduced, pivots = rref(matrix)
    free = [j for j in range(matrix.cols) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * matrix.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -reduced[i, f]
        basis.append(tuple(v))
    return basis


def image_basis(matrix):
    """Basis of the column space made of the pivot columns of ``matrix``."""
    _, pivots = rref(matrix)
    return [matrix.column(p) for p in pivots]


def solve(matrix, rhs):
    """A particular solution ``x`` of ``M x = rhs``, or ``None``.

    Free variables are set to zero, so the solution is deterministic.

    """
    rhs = [as_rational(v) for v in rhs]
    if len(rhs) != matrix.rows:
        raise DimensionError("right-hand side of length {} for a matrix of "
                             "shape {}".format(len(rhs), matrix.shape))
    if matrix.cols == 0:
        return () if not any(rhs) else None

    augmented = matrix.hstack(QMatrix.from_columns([rhs], matrix.rows))
    reduced, pivots = rref(augmented)
    if matrix.cols in pivots:
        return None

    x = [Fraction(0)] * matrix.cols
    for i, p in enumerate(pivots):
        x[p] = reduced[i, matrix.cols]
    return tuple(x)


def in_span(vector, basis):
    """Whether ``vector`` lies in the span of ``basis``."""
    vector = [as_rational(v) for v in vector]
    if not basis:
        return not any(vector)
    return solve(QMatrix.from_columns(basis, len(vector)), vector) is not None


class QSubspace:
    """A subspace of ``Q^n`` kept in reduced echelon form.

    :meth:`reduce` returns the canonical representative of the coset
    ``v + U``: the unique vector of the coset vanishing at all pivot
    positions.

    """

    def __init__(self, vectors, dim):
        self.ambient_dim = dim
        vectors = [tuple(as_rational(x) for x in v) for v in vectors]
        for v in vectors:
            if len(v) != dim:
                raise DimensionError("vector of length {} in Q^{}"
                                     .format(len(v), dim))
        if vectors and dim:
            reduced, pivots = rref(QMatrix(vectors, shape=(len(vectors), dim)))
            self._rows = [reduced.row(i) for i in range(len(pivots))]
            self.pivots = pivots
        else:
            self._rows = []
            self.pivots = ()

    @property
    def dim(self):
        return len(self.pivots)

    @property
    def basis(self):
        return list(self._rows)

    def reduce(self, vector):
        v = [as_rational(x) for x in vector]
        if len(v) != self.ambient_dim:
            raise DimensionError("vector of length {} in Q^{}"
                                 .format(len(v), self.ambient_dim))
        for row, p in zip(self._rows, self.pivots):
            c = v[p]
            if c:
                for k, r in enumerate(row):
                    if r:
                        v[k] -= c * r
        return tuple(v)

    def contains(self, vector):
        return not any(self.reduce(vector))

    def __contains__(self, vector):
        return self.contains(vector)

    def complement_positions(self):
        """Coordinates not used as pivots, a basis of the quotient."""
        return [i for i in range(self.ambient_dim) if i not in self.pivots]
