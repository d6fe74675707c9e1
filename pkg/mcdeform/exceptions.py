"""Exceptions raised by mcdeform."""


class MCDeformError(Exception):
    """Base class for all mcdeform errors."""


class FormatError(MCDeformError, ValueError):
    """Malformed serialized input (JSON payload, rational string, ...)."""


class DimensionError(MCDeformError, ValueError):
    """Incompatible matrix or vector dimensions."""


class ContextMismatchError(MCDeformError, ValueError):
    """Operands live in different truncation contexts or algebras."""


class DegreeError(MCDeformError, ValueError):
    """Wrong homogeneous degree, or basis name outside the degree window."""


class AxiomError(MCDeformError, ValueError):
    """A DG Lie algebra, morphism or L-infinity morphism failed validation.

    The failing :class:`~mcdeform.base.Report` is available as ``report``.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotMaurerCartanError(MCDeformError, ValueError):
    """An element that should satisfy the Maurer-Cartan equation does not."""


class PreconditionError(MCDeformError, ValueError):
    """Any other violated precondition of an operation."""


class ObstructionError(MCDeformError):
    """A non-vanishing obstruction class prevents the requested construction.

    This is a legitimate mathematical answer, not a failure. The class is
    available as ``obstruction``.
    """

    def __init__(self, message, obstruction=None):
        super().__init__(message)
        self.obstruction = obstruction


class InvariantViolation(MCDeformError, AssertionError):
    """A step that the constructive proofs guarantee has failed."""
