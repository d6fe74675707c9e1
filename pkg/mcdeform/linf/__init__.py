"""
The :mod:`mcdeform.linf` module gathers L-infinity morphisms between DG
Lie algebras given by Taylor coefficients, the truncated symmetric
coalgebra used to validate and compose them, and the pushforward of
Maurer-Cartan elements, Maurer-Cartan paths and gauge equivalences.

"""

from ._bar import (BarElement, BarCoderivation, bar_coderivation,
                   koszul_sort, sym_basis)
from ._morphism import (LInfMorphism, coalgebra_image, validate_linf,
                        compose_linf, correct_weight_two,
                        homotopy_extension)
from ._pushforward import (mc_pushforward, twisted_linear_part, push_path,
                           gauge_respect)
