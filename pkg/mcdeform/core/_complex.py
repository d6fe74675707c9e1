from fractions import Fraction

from ..exceptions import InvariantViolation
from ._linalg import QMatrix, image_basis, kernel_basis, rref, solve


class Cohomology:
    """Cohomology ``H = ker(d_out) / im(d_in)`` of one degree of a complex.

    Parameters
    ----------
    d_in : QMatrix
        Incoming differential, shape ``(dim, dim_prev)``.
    d_out : QMatrix
        Outgoing differential, shape ``(dim_next, dim)``.
    dim : int
        Dimension of the degree under consideration.

    Notes
    -----
    Class representatives are cocycle basis vectors picked
    earliest-first among those independent modulo coboundaries, so the
    choice is deterministic.

    """

    def __init__(self, d_in, d_out, dim):
        if d_in.rows != dim or d_out.cols != dim:
            raise ValueError("differentials do not match dimension {}"
                             .format(dim))
        self.dim = dim
        self.d_in = d_in
        self.d_out = d_out

        if d_out.rows == 0:
            self.cocycles = [tuple(Fraction(int(i == j)) for i in range(dim))
                             for j in range(dim)]
        else:
            self.cocycles = kernel_basis(d_out)
        self.coboundaries = image_basis(d_in) if d_in.cols else []

        nb = len(self.coboundaries)
        if self.cocycles and dim:
            stacked = QMatrix.from_columns(self.coboundaries + self.cocycles,
                                           dim)
            _, pivots = rref(stacked)
            self.representatives = [self.cocycles[p - nb] for p in pivots
                                    if p >= nb]
        else:
            self.representatives = []

    def __repr__(self):
        return 'Cohomology(dimension={})'.format(self.dimension)

    @property
    def dimension(self):
        return len(self.representatives)

    def is_cocycle(self, vector):
        return not any(self.d_out.apply(vector)) if self.d_out.rows else True

    def is_coboundary(self, vector):
        if not self.coboundaries:
            return not any(vector)
        return solve(QMatrix.from_columns(self.coboundaries, self.dim),
                     vector) is not None

    def class_coordinates(self, vector):
        """Coordinates of the class of a cocycle in the representative basis.

        Raises :class:`~mcdeform.exceptions.InvariantViolation` if
        ``vector`` is not a cocycle.

        """
        if not self.is_cocycle(vector):
            raise InvariantViolation("vector is not a cocycle")
        if not self.representatives:
            return ()
        nb = len(self.coboundaries)
        basis = QMatrix.from_columns(self.coboundaries + self.representatives,
                                     self.dim)
        x = solve(basis, vector)
        if x is None:
            raise InvariantViolation("cocycle is not spanned by "
                                     "coboundaries and representatives")
        return tuple(x[nb:])

    def from_coordinates(self, coordinates):
        """The cocycle ``sum c_k rep_k``."""
        v = [Fraction(0)] * self.dim
        for c, rep in zip(coordinates, self.representatives):
            if c:
                for i, r in enumerate(rep):
                    v[i] += c * r
        return tuple(v)


def induced_map(source, target, linear_map):
    """Matrix of the map induced on cohomology by a chain map.

    Parameters
    ----------
    source, target : Cohomology
    linear_map : callable
        Maps a coordinate vector of the source degree to one of the
        target degree.

    Returns
    -------
    QMatrix
        Shape ``(target.dimension, source.dimension)``.

    """
    columns = [target.class_coordinates(linear_map(rep))
               for rep in source.representatives]
    return QMatrix.from_columns(columns, target.dimension) \
        if columns else QMatrix.zeros(target.dimension, 0)


def is_bijective(matrix):
    if matrix.rows != matrix.cols:
        return False
    return len(rref(matrix)[1]) == matrix.rows
