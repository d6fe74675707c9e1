"""
The :mod:`mcdeform.twogroupoid` module gathers crossed groupoids, the
2-groupoids they present, sampled checks of their axioms and the
Deligne 2-groupoid of a nilpotent DG Lie algebra together with
witness-level evidence about its homotopy groups.

"""

from ._twogroupoid import (TwoMorphism, TwoGroupoid,
                           ReconstructedCrossedGroupoid, check_crossed_axioms,
                           check_two_groupoid_axioms, reconstruction_report)
from ._deligne import (GaugeArrow, CosetElement, CokernelAlgebra,
                       DeligneCrossedGroupoid, DeligneCrossedData,
                       build_deligne_crossed, deligne_report,
                       crossed_check_report, pi1_reduced, Pi2Group, pi2,
                       pi2_transport_report, Pi0Evidence, pi0_evidence,
                       weak_equiv_evidence)
