import logging

from ..base import Report
from ..core import QMatrix, as_rational, induced_map, is_bijective
from ..exceptions import AxiomError, ContextMismatchError, DimensionError
from ..options import OPTIONS
from ._dgla import _accumulate, cohomology


logger = logging.getLogger(__name__)


class DGLAMorphism:
    """Morphism of DG Lie algebras given by per-degree matrices.

    Parameters
    ----------
    source, target : DGLieAlgebra
    components : dict
        Maps a degree ``i`` to a :class:`~mcdeform.core.QMatrix` of shape
        ``(dim target^i, dim source^i)``. Missing degrees are zero.
    check : bool, optional
        Verify that the map commutes with the differentials and preserves
        brackets on all basis pairs (defaults to
        ``OPTIONS['check_axioms']``).

    """

    def __init__(self, source, target, components, check=None):
        self.source = source
        self.target = target

        self._components = {}
        for d, m in components.items():
            d = int(d)
            if not isinstance(m, QMatrix):
                m = QMatrix(m, shape=(target.space.dim(d),
                                      source.space.dim(d)))
            if m.shape != (target.space.dim(d), source.space.dim(d)):
                raise DimensionError(
                    "component in degree {} has shape {}, expected {}".format(
                        d, m.shape,
                        (target.space.dim(d), source.space.dim(d))))
            self._components[d] = m

        self._images = {}
        for i in range(len(source.space)):
            self._images[i] = self._basis_image(i)

        if check is None:
            check = OPTIONS['check_axioms']
        if check:
            report = validate_morphism(self)
            if not report:
                raise AxiomError("invalid DG Lie algebra morphism: {}".format(
                    ', '.join(report.failed_names())), report)

    def _basis_image(self, i):
        sspace, tspace = self.source.space, self.target.space
        d = sspace.degree(i)
        m = self._components.get(d)
        if m is None:
            return {}
        col = sspace.local_index(i)
        targets = tspace.indices(d)
        return {targets[r]: m[r, col] for r in range(m.rows) if m[r, col]}

    def __repr__(self):
        return '<DGLAMorphism {!r} -> {!r}>'.format(self.source, self.target)

    @classmethod
    def identity(cls, g):
        degrees = g.space.degrees
        return cls(g, g, {d: QMatrix.identity(g.space.dim(d))
                          for d in degrees}, check=False)

    @classmethod
    def from_images(cls, source, target, images, check=None):
        """Build from ``{x: {y: c}}`` images of source basis names."""
        components = {}
        for d in source.space.degrees:
            m = QMatrix.zeros(target.space.dim(d), source.space.dim(d))
            for col, x in enumerate(source.space.basis(d)):
                for y, c in images.get(x, {}).items():
                    j = target.space.index(y)
                    if target.space.degree(j) != d:
                        raise DimensionError("image of {} has a component "
                                             "{} of another degree"
                                             .format(x, y))
                    m._data[target.space.local_index(j), col] = \
                        m._data[target.space.local_index(j), col] + as_rational(c)
            components[d] = m
        return cls(source, target, components, check=check)

    def matrix(self, degree):
        m = self._components.get(degree)
        if m is None:
            return QMatrix.zeros(self.target.space.dim(degree),
                                 self.source.space.dim(degree))
        return m

    @property
    def components(self):
        return dict(self._components)

    def basis_image(self, i):
        return self._images[i]

    def apply_vector(self, vector):
        """Image of a sparse vector ``{source index: c}``."""
        acc = {}
        for i, c in vector.items():
            _accumulate(acc, self._images[i], c)
        return acc

    def apply_local(self, degree, coordinates):
        """Image of local coordinates of ``source^degree``."""
        return self.matrix(degree).apply(coordinates)

    def compose(self, other):
        """Returns ``self o other`` (``other`` is applied first)."""
        if other.target != self.source:
            raise ContextMismatchError("morphisms are not composable")
        degrees = set(self.source.space.degrees) | set(
            other.source.space.degrees)
        return DGLAMorphism(other.source, self.target,
                            {d: self.matrix(d) @ other.matrix(d)
                             for d in degrees},
                            check=False)

    def cohomology_map(self, degree):
        """Matrix of ``H^degree(phi)`` in the chosen class bases."""
        hs, ht = cohomology(self.source, degree), cohomology(self.target,
                                                             degree)
        return induced_map(hs, ht, lambda v: self.apply_local(degree, v))


def validate_morphism(phi):
    """Check ``phi d = d phi`` and ``phi[x, y] = [phi x, phi y]``."""
    g, h = phi.source, phi.target
    name = g.space.name
    n = len(g.space)
    report = Report('DG Lie algebra morphism')

    witness = None
    for i in range(n):
        lhs = phi.apply_vector(g.d_basis(i))
        rhs = h.d_vector(phi.basis_image(i))
        if _accumulate(lhs, rhs, -1):
            witness = (name(i),)
            break
    report.add('chain_map', witness is None, witness)

    witness = None
    for i in range(n):
        for j in range(n):
            lhs = phi.apply_vector(g.bracket_basis(i, j))
            rhs = h.bracket_vectors(phi.basis_image(i), phi.basis_image(j))
            if _accumulate(lhs, rhs, -1):
                witness = (name(i), name(j))
                break
        if witness is not None:
            break
    report.add('bracket', witness is None, witness)
    return report


def is_quasi_iso(phi):
    """Whether ``phi`` induces isomorphisms on all cohomology groups.

    Returns
    -------
    report : :class:`~mcdeform.base.Report`
        Truthy iff ``phi`` is a quasi-isomorphism, with one check
        ``H^i`` per degree of the union of both windows.

    """
    lo = min(phi.source.window[0], phi.target.window[0])
    hi = max(phi.source.window[1], phi.target.window[1])
    report = Report('quasi-isomorphism')
    for i in range(lo, hi + 1):
        m = phi.cohomology_map(i)
        report.add('H^{}'.format(i), is_bijective(m), i,
                   'dim {} -> dim {}'.format(m.cols, m.rows))
    logger.debug("quasi-iso check: %s", [c.passed for c in report.checks])
    return report
