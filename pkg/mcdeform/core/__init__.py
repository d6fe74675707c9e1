"""
The :mod:`mcdeform.core` module gathers exact arithmetic: rationals,
the truncated parameter algebra, Q-linear algebra and polynomials in
one variable ``t``.

"""

from ._scalars import (as_rational, parse_rational, format_rational,
                       bernoulli_number, inverse_factorial)
from ._series import (TruncationContext, SeriesElement, series_mul,
                      format_monomial)
from ._linalg import (QMatrix, QSubspace, rref, rank, kernel_basis,
                      image_basis, solve, in_span)
from ._complex import Cohomology, induced_map, is_bijective
from ._poly import TPoly, PolyForm, poly_integrate, interpolate
