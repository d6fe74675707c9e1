from ..core import Cohomology, QMatrix, QSubspace, kernel_basis
from ..exceptions import DegreeError
from ._gauge import MCElement


class TwistedComplex:
    """The twisted complex ``(m (x) g, d_omega)``, ``d_omega = d + [omega, -]``.

    ``omega`` must be Maurer-Cartan, so ``d_omega`` squares to zero.
    Matrices are expressed in the flat coordinates of the ambient.

    """

    def __init__(self, omega):
        if not isinstance(omega, MCElement):
            omega = MCElement(omega)
        self.omega = omega
        self.ambient = omega.ambient
        self._matrices = {}
        self._cohomology = {}

    def __repr__(self):
        return 'TwistedComplex({!r})'.format(self.omega)

    @property
    def window(self):
        return self.ambient.base.window

    def apply(self, x):
        ambient = self.ambient
        return ambient.d(x) + ambient.bracket(self.omega.value, x)

    def matrix(self, degree):
        """Matrix of ``d_omega`` from degree ``degree`` to ``degree + 1``."""
        if degree not in self._matrices:
            ambient = self.ambient
            if ambient.dim(degree) == 0 or ambient.dim(degree + 1) == 0:
                m = QMatrix.zeros(ambient.dim(degree + 1),
                                  ambient.dim(degree))
            else:
                m = ambient.linear_map_matrix(self.apply, degree, degree + 1)
            self._matrices[degree] = m
        return self._matrices[degree]

    def cohomology(self, degree):
        if degree not in self._cohomology:
            self._cohomology[degree] = Cohomology(
                self.matrix(degree - 1), self.matrix(degree),
                self.ambient.dim(degree))
        return self._cohomology[degree]

    def boundary_space(self, degree):
        """``d_omega`` of degree ``degree - 1``, as a subspace of degree
        ``degree``."""
        return QSubspace(self.matrix(degree - 1).columns(),
                         self.ambient.dim(degree))

    def cocycle_basis(self, degree):
        """Basis of the ``d_omega``-closed elements of a degree."""
        if self.ambient.dim(degree) == 0:
            return []
        if self.ambient.dim(degree + 1) == 0:
            return self.ambient.basis_elements(degree)
        return [self.ambient.from_coordinates(degree, v)
                for v in kernel_basis(self.matrix(degree))]

    def is_closed(self, x):
        return self.apply(x).is_zero()

    def is_exact(self, x):
        if x.degree < self.window[0] - 1:
            raise DegreeError("degree out of range")
        return self.boundary_space(x.degree).contains(
            self.ambient.coordinates(x))

    def check_square_zero(self):
        """Whether ``d_omega o d_omega = 0`` on every degree of the window."""
        lo, hi = self.window
        for i in range(lo - 1, hi + 1):
            a, b = self.matrix(i), self.matrix(i + 1)
            if a.cols and b.rows and not (b @ a).is_zero():
                return False
        return True


def twisted(omega):
    """The complex twisted by a Maurer-Cartan element."""
    return TwistedComplex(omega)
