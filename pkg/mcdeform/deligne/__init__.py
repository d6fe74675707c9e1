"""
The :mod:`mcdeform.deligne` module gathers obstruction classes,
order-by-order lifting of Maurer-Cartan elements and gauge elements,
reduced hom-sets of the Deligne groupoid and the constructive transfer
of Maurer-Cartan data along quasi-isomorphisms.

"""

from ._obstruction import (ObstructionClass, o2, o1, lift_mc_one_order,
                           lift_mc, connect_one_order, connect_greedy,
                           Connected, ObstructedAtOrder, Inconclusive)
from ._reduced import (reduced_equal, ReducedHomWitness, Stabilizer,
                       stabilizer_exp, is_stabilizing)
from ._transfer import (TransferResult, push_class, transfer_mc, lift_gauge,
                        twisted_quasi_iso_report)
