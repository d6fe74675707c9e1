import enum
import logging
from fractions import Fraction

from ..base import Report
from ..core import Cohomology, QMatrix, as_rational
from ..exceptions import AxiomError, DegreeError
from ..options import OPTIONS


logger = logging.getLogger(__name__)


def _accumulate(acc, vector, scale=1):
    for k, v in vector.items():
        s = acc.get(k, 0) + scale * v
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)
    return acc


def _sign(p, q):
    """Antisymmetry sign ``-(-1)^(p q)``."""
    return -1 if (p * q) % 2 == 0 else 1


class GradedSpace:
    """Finite-dimensional graded Q-vector space with named basis vectors.

    Parameters
    ----------
    degrees : dict
        Maps each degree to the sequence of basis names of that degree.
    window : tuple, optional
        ``(min_degree, max_degree)``. Defaults to the range of the given
        degrees.

    """

    def __init__(self, degrees, window=None):
        self._basis = {}
        for d, names in sorted((int(k), v) for k, v in degrees.items()):
            self._basis[d] = tuple(str(n) for n in names)

        present = [d for d, names in self._basis.items()]
        if window is None:
            window = (min(present), max(present)) if present else (0, 0)
        self.window = (int(window[0]), int(window[1]))
        for d in present:
            if not self.window[0] <= d <= self.window[1]:
                raise DegreeError("degree {} lies outside the window {}"
                                  .format(d, self.window))

        self.names = tuple(n for d in sorted(self._basis)
                           for n in self._basis[d])
        if len(set(self.names)) != len(self.names):
            raise DegreeError("basis names must be unique")

        self._index = {n: i for i, n in enumerate(self.names)}
        self._degrees = tuple(d for d in sorted(self._basis)
                              for _ in self._basis[d])
        self._local = {}
        for d, names in self._basis.items():
            for k, n in enumerate(names):
                self._local[self._index[n]] = k

    def __repr__(self):
        return 'GradedSpace({})'.format(
            {d: list(n) for d, n in self._basis.items() if n})

    def __eq__(self, other):
        if not isinstance(other, GradedSpace):
            return NotImplemented
        return self.window == other.window and self.degree_map() == \
            other.degree_map()

    def __hash__(self):
        return hash((self.window, tuple(sorted(self.degree_map().items()))))

    def __len__(self):
        return len(self.names)

    def degree_map(self):
        return {d: n for d, n in self._basis.items() if n}

    @property
    def degrees(self):
        """Degrees carrying at least one basis vector."""
        return [d for d, n in sorted(self._basis.items()) if n]

    def basis(self, degree):
        return self._basis.get(degree, ())

    def dim(self, degree):
        return len(self._basis.get(degree, ()))

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise DegreeError("unknown basis vector {!r}".format(name))

    def name(self, index):
        return self.names[index]

    def degree(self, index):
        """Degree of a basis vector given by global index."""
        return self._degrees[index]

    def degree_of(self, name):
        return self._degrees[self.index(name)]

    def local_index(self, index):
        """Position of a basis vector within its degree."""
        return self._local[index]

    def indices(self, degree):
        return tuple(self._index[n] for n in self.basis(degree))


class DGLieAlgebra:
    """Finite-dimensional differential graded Lie algebra over Q.

    Parameters
    ----------
    space : GradedSpace or dict
        Graded basis (a dict is passed to :class:`GradedSpace`).
    differential : dict, optional
        ``{x: {y: c, ...}}`` meaning ``d(x) = sum c y``.
    bracket : dict, optional
        ``{(x, y): {z: c, ...}}`` meaning ``[x, y] = sum c z``. Entries not
        given are derived by graded antisymmetry.
    name : str, optional
    check : bool, optional
        Validate the axioms at construction (defaults to
        ``OPTIONS['check_axioms']``) and raise
        :class:`~mcdeform.exceptions.AxiomError` on failure.

    Notes
    -----
    Conventions: ``[x, y] = -(-1)^(|x||y|) [y, x]``,
    ``[x, [y, z]] = [[x, y], z] + (-1)^(|x||y|) [y, [x, z]]`` and
    ``d[x, y] = [dx, y] + (-1)^|x| [x, dy]``.

    """

    def __init__(self, space, differential=None, bracket=None, name=None,
                 check=None):
        if not isinstance(space, GradedSpace):
            space = GradedSpace(space)
        self.space = space
        self.name = name

        self._d = {}
        for x, image in (differential or {}).items():
            i = space.index(x)
            vec = {}
            for y, c in image.items():
                j = space.index(y)
                if space.degree(j) != space.degree(i) + 1:
                    raise DegreeError("d({}) has a component along {} of "
                                      "the wrong degree".format(x, y))
                _accumulate(vec, {j: as_rational(c)})
            if vec:
                self._d[i] = vec

        self._raw = {}
        for (x, y), image in (bracket or {}).items():
            i, j = space.index(x), space.index(y)
            vec = {}
            for z, c in image.items():
                k = space.index(z)
                if space.degree(k) != space.degree(i) + space.degree(j):
                    raise DegreeError("[{}, {}] has a component along {} of "
                                      "the wrong degree".format(x, y, z))
                _accumulate(vec, {k: as_rational(c)})
            if vec:
                self._raw[(i, j)] = vec

        self._table = self._build_table()

        if check is None:
            check = OPTIONS['check_axioms']
        if check:
            report = validate_dgla(self)
            if not report:
                raise AxiomError("invalid DG Lie algebra: {}".format(
                    ', '.join(report.failed_names())), report)

    def _build_table(self):
        table = {}
        deg = self.space.degree
        for (i, j), vec in self._raw.items():
            if i <= j:
                table[(i, j)] = dict(vec)
            elif (j, i) not in self._raw:
                s = _sign(deg(i), deg(j))
                table[(j, i)] = {k: s * c for k, c in vec.items()}
        for (i, j), vec in list(table.items()):
            if i != j:
                s = _sign(deg(i), deg(j))
                table[(j, i)] = {k: s * c for k, c in vec.items()}
        return table

    def __repr__(self):
        label = ' {!r}'.format(self.name) if self.name else ''
        return '<DGLieAlgebra{} {!r}>'.format(label, self.space)

    def __eq__(self, other):
        if not isinstance(other, DGLieAlgebra):
            return NotImplemented
        return (self.space == other.space and self._d == other._d
                and self._raw == other._raw)

    def __hash__(self):
        return hash((self.space, len(self._d), len(self._raw)))

    @property
    def dim(self):
        return len(self.space)

    @property
    def window(self):
        return self.space.window

    def degree(self, index):
        return self.space.degree(index)

    @property
    def is_abelian(self):
        return not self._table

    @property
    def differential(self):
        """Differential as ``{x: {y: c}}`` keyed by basis names."""
        name = self.space.name
        return {name(i): {name(j): c for j, c in vec.items()}
                for i, vec in sorted(self._d.items())}

    @property
    def bracket_entries(self):
        """Structure constants exactly as given, keyed by name pairs."""
        name = self.space.name
        return {(name(i), name(j)): {name(k): c for k, c in vec.items()}
                for (i, j), vec in sorted(self._raw.items())}

    def d_basis(self, i):
        return self._d.get(i, {})

    def bracket_basis(self, i, j):
        return self._table.get((i, j), {})

    def d_vector(self, vector):
        acc = {}
        for i, c in vector.items():
            image = self._d.get(i)
            if image:
                _accumulate(acc, image, c)
        return acc

    def bracket_vectors(self, u, v):
        acc = {}
        for i, a in u.items():
            for j, b in v.items():
                image = self._table.get((i, j))
                if image:
                    _accumulate(acc, image, a * b)
        return acc

    def matrix_d(self, degree):
        """Matrix of ``d: g^degree -> g^(degree+1)`` in local coordinates."""
        space = self.space
        m = QMatrix.zeros(space.dim(degree + 1), space.dim(degree))
        data = m._data
        for col, i in enumerate(space.indices(degree)):
            for j, c in self._d.get(i, {}).items():
                data[space.local_index(j), col] = c
        return m


def validate_dgla(g):
    """Check the DG Lie algebra axioms exhaustively on basis tuples.

    Returns
    -------
    report : :class:`~mcdeform.base.Report`
        Checks named ``d_squared``, ``antisymmetry``, ``jacobi`` and
        ``leibniz``; the witness of a failing check is the tuple of basis
        names where it fails first.

    """
    space = g.space
    deg = space.degree
    name = space.name
    n = len(space)
    report = Report('DG Lie algebra' if g.name is None else g.name)

    witness = None
    for i in range(n):
        if g.d_vector(g.d_basis(i)):
            witness = (name(i),)
            break
    report.add('d_squared', witness is None, witness)

    witness = None
    for (i, j), vec in sorted(g._raw.items()):
        if i < j and (j, i) in g._raw:
            s = _sign(deg(i), deg(j))
            if g._raw[(j, i)] != {k: s * c for k, c in vec.items()}:
                witness = (name(i), name(j))
                break
        elif i == j and deg(i) % 2 == 0:
            witness = (name(i), name(i))
            break
    report.add('antisymmetry', witness is None, witness)

    witness = None
    for i in range(n):
        if witness is not None:
            break
        for j in range(n):
            xy = g.bracket_basis(i, j)
            s = 1 if (deg(i) * deg(j)) % 2 == 0 else -1
            for k in range(n):
                lhs = g.bracket_vectors({i: 1}, g.bracket_basis(j, k))
                rhs = g.bracket_vectors(xy, {k: 1})
                _accumulate(rhs, g.bracket_vectors({j: 1},
                                                   g.bracket_basis(i, k)), s)
                if _accumulate(lhs, rhs, -1):
                    witness = (name(i), name(j), name(k))
                    break
            if witness is not None:
                break
    report.add('jacobi', witness is None, witness)

    witness = None
    for i in range(n):
        s = 1 if deg(i) % 2 == 0 else -1
        for j in range(n):
            lhs = g.d_vector(g.bracket_basis(i, j))
            rhs = g.bracket_vectors(g.d_basis(i), {j: 1})
            _accumulate(rhs, g.bracket_vectors({i: 1}, g.d_basis(j)), s)
            if _accumulate(lhs, rhs, -1):
                witness = (name(i), name(j))
                break
        if witness is not None:
            break
    report.add('leibniz', witness is None, witness)

    if not report:
        logger.debug("validation failed: %s", report.failed_names())
    return report


def cohomology(g, degree):
    """Cohomology ``H^degree(g)`` (zero outside the window)."""
    return Cohomology(g.matrix_d(degree - 1), g.matrix_d(degree),
                      g.space.dim(degree))


class QuantumType(enum.Enum):
    QUANTUM = 'quantum'
    NOT_QUANTUM = 'not_quantum'
    QUASI_QUANTUM = 'quasi_quantum'


def classify_quantum_type(g, witness=None):
    """Classify ``g`` as quantum type (no basis vectors below degree -1).

    Parameters
    ----------
    g : DGLieAlgebra
    witness : DGLAMorphism, optional
        A quasi-isomorphism from a quantum type algebra into ``g``. When
        given and verified, a non quantum ``g`` is classified as
        ``QUASI_QUANTUM``. No witness is ever searched for.

    """
    if all(g.space.dim(d) == 0 for d in range(g.window[0], -1)):
        return QuantumType.QUANTUM

    if witness is not None:
        from ._morphism import is_quasi_iso

        if (witness.target == g
                and classify_quantum_type(witness.source)
                is QuantumType.QUANTUM
                and is_quasi_iso(witness)):
            return QuantumType.QUASI_QUANTUM

    return QuantumType.NOT_QUANTUM
