"""
The :mod:`mcdeform.samples` module gathers seeded random generators of
DG Lie algebras, quasi-isomorphisms, Maurer-Cartan elements and gauge
elements. Every generator takes a ``random_state`` (``None``, an int or
a :class:`numpy.random.RandomState`).

"""

from ._samples import (check_random_state, random_rational, random_element,
                       random_gauge, random_mc, random_lie_algebra,
                       random_dga, random_dgla, random_abelian_dgla,
                       random_quasi_iso_pair, random_homotopy,
                       random_nonstrict_linf)
