"""
The :mod:`mcdeform.dgla` module gathers finite-dimensional DG Lie
algebras over Q given by structure constants, their morphisms and
cohomology, and the nilpotent algebras obtained by tensoring with the
maximal ideal of a truncated parameter algebra.

"""

from ._dgla import (GradedSpace, DGLieAlgebra, QuantumType, validate_dgla,
                    cohomology, classify_quantum_type)
from ._morphism import DGLAMorphism, validate_morphism, is_quasi_iso
from ._nilpotent import NilElement, NilpotentDGLA, tensor_with_m
from ._constructions import (GradedCommutativeDGA, validate_dga,
                             exterior_algebra, square_zero_extension,
                             contractible_unit, current_algebra, lie_algebra,
                             abelian_lie_algebra, affine_lie_algebra,
                             heisenberg_lie_algebra, sl2_lie_algebra)
