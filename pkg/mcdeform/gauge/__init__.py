"""
The :mod:`mcdeform.gauge` module gathers the Maurer-Cartan equation,
the gauge group (stored by logarithms and multiplied with the
Baker-Campbell-Hausdorff series), its adjoint and affine actions,
twisted complexes and Maurer-Cartan paths over the interval.

"""

from ._gauge import (curvature, is_maurer_cartan, MCElement, GaugeElement,
                     bch, bch_series, ad_exp, af_action,
                     infinitesimal_action)
from ._twisted import TwistedComplex, twisted
from ._paths import MCPath, path_from_gauge, integrate_mc_path
