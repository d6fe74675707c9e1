import logging
from dataclasses import dataclass

from ..exceptions import InvariantViolation, PreconditionError
from ..gauge import GaugeElement, MCElement, af_action, bch, twisted


logger = logging.getLogger(__name__)


def reduced_equal(g, g2, omega):
    """Whether ``g`` and ``g2`` define the same reduced gauge morphism.

    Both must carry ``omega`` to the same element. They are identified
    modulo ``N^r_omega = exp(d_omega(m (x) g^-1))``, which is decided by
    linear membership of ``bch(-log g2, log g)``.

    """
    omega = MCElement(omega)
    if af_action(g, omega) != af_action(g2, omega):
        raise PreconditionError("gauge elements carry the MC element to "
                                "different targets")
    delta = bch(-g2.log, g.log)
    complex_ = twisted(omega)
    return complex_.boundary_space(0).contains(
        omega.ambient.coordinates(delta))


@dataclass(frozen=True)
class ReducedHomWitness:
    """A morphism ``source -> target`` of the reduced Deligne groupoid.

    ``stabilizer_image`` is the subspace ``d_source(m (x) g^-1)`` of
    ``m (x) g^0`` by which ``witness`` is determined.
    """
    source: MCElement
    target: MCElement
    witness: GaugeElement
    stabilizer_image: object

    @classmethod
    def from_gauge(cls, omega, g):
        omega = MCElement(omega)
        target = af_action(g, omega)
        complex_ = twisted(omega)
        image = complex_.boundary_space(0)
        for v in image.basis:
            if any(complex_.matrix(0).apply(v)):
                raise InvariantViolation("d_omega of a degree -1 element is "
                                         "not closed")
        return cls(omega, target, g, image)

    def same_class(self, other):
        """Whether another gauge element represents the same morphism."""
        if isinstance(other, ReducedHomWitness):
            other = other.witness
        return reduced_equal(self.witness, other, self.source)

    def compose(self, other):
        """``other o self`` for ``other`` starting at ``self.target``."""
        if other.source != self.target:
            raise PreconditionError("reduced morphisms are not composable")
        return ReducedHomWitness.from_gauge(self.source,
                                            other.witness * self.witness)


class Stabilizer:
    """The reduced automorphism group of an MC element.

    ``exp`` induces a bijection from the twisted ``H^0`` onto the
    stabilizer of ``omega`` modulo ``N^r_omega``.
    """

    def __init__(self, omega):
        self.omega = MCElement(omega)
        self.ambient = self.omega.ambient
        self.complex = twisted(self.omega)
        self.cohomology = self.complex.cohomology(0)
        self.basis = [self.ambient.from_coordinates(0, v)
                      for v in self.cohomology.representatives]

        identity = GaugeElement.identity(self.ambient)
        elements = [GaugeElement(k) for k in self.basis]
        for g in elements:
            if af_action(g, self.omega) != self.omega:
                raise InvariantViolation("exp of a twisted H^0 class does not "
                                         "stabilize the MC element")
            if reduced_equal(g, identity, self.omega):
                raise InvariantViolation("non-trivial twisted H^0 class is "
                                         "trivial in the reduced group")
        for a in range(len(elements)):
            for b in range(a + 1, len(elements)):
                if reduced_equal(elements[a], elements[b], self.omega):
                    raise InvariantViolation("distinct twisted H^0 classes "
                                             "are identified")
        logger.debug("stabilizer of dimension %d", self.dimension)

    def __repr__(self):
        return 'Stabilizer(dimension={})'.format(self.dimension)

    @property
    def dimension(self):
        return len(self.basis)

    def element(self, coordinates):
        """``exp(sum c_k kappa_k)`` for class coordinates ``c``."""
        log = self.ambient.zero(0)
        for c, k in zip(coordinates, self.basis):
            log = log + k * c
        return GaugeElement(log)

    def class_of(self, g):
        """Class coordinates of a stabilizer element."""
        if af_action(g, self.omega) != self.omega:
            raise PreconditionError("gauge element does not stabilize the "
                                    "MC element")
        return self.cohomology.class_coordinates(
            self.ambient.coordinates(g.log))


def stabilizer_exp(omega):
    """Twisted ``H^0`` basis and the exp-bijection onto the reduced
    stabilizer of ``omega``."""
    return Stabilizer(omega)


def is_stabilizing(kappa, omega):
    """Whether ``exp(kappa)`` fixes ``omega``."""
    omega = MCElement(omega)
    return af_action(GaugeElement(kappa), omega) == omega
