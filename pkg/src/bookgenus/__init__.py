"""Exact classification of closed orientable 3-manifolds presented by small
open book decompositions.

The core objects are open books with pages of Euler characteristic >= -1
(disk, annulus, pants, once-punctured torus) and the branched double
covers of closed braids.  Everything is computed over Z: Smith normal
forms, Burau actions at -1, Seifert presentations.  See the submodules:

    exactalg   Smith normal form, cokernels, determinants
    braid      braid words, closures, Burau at -1
    mcg        pants and once-punctured-torus monodromies
    openbook   pages, plumbing, genus bookkeeping, branched-cover books
    classify   manifold recognition and open book genus bounds
    reports    JSON reports shared by the CLI and the service
"""

from .braid import (BraidWord, ClosureData, branched_cover_h1_3braid,
                    burau_neg1, closure_data, connected_sum_braid,
                    determinant_of_closure_3braid, parse_braid_word)
from .classify import (ConnectedSum, Lens, ManifoldClass, ObgResult, S1xS2,
                       S3, SeifertInvariants, SeifertPrime, Unknown,
                       classify_dbc_3braid, classify_pants, euler_number,
                       obg_eval, seifert_from_pants, seifert_h1)
from .errors import DomainError, ParseError
from .exactalg import (AbelianGroup, IntMatrix, SmithForm, cokernel,
                       determinant, direct_sum, group_order,
                       smith_normal_form)
from .mcg import (PantsMonodromy, TorusTwistWord, birman_hilden_lift,
                  compose_pants, parse_pants, torus_rep)
from .openbook import (ANNULUS, DISK, ONE_HOLED_TORUS, PANTS, OpenBook,
                       PageType, dbc_obg_bound, dbc_open_book,
                       euler_characteristic, h1_connected_binding,
                       induced_heegaard_genus, obg_upper_bound, plumb)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup", "ANNULUS", "BraidWord", "ClosureData", "ConnectedSum",
    "DISK", "DomainError", "IntMatrix", "Lens", "ManifoldClass", "ObgResult",
    "ONE_HOLED_TORUS", "OpenBook", "PANTS", "PageType", "PantsMonodromy",
    "ParseError", "S1xS2", "S3", "SeifertInvariants", "SeifertPrime",
    "SmithForm", "TorusTwistWord", "Unknown", "birman_hilden_lift",
    "branched_cover_h1_3braid", "burau_neg1", "classify_dbc_3braid",
    "classify_pants", "closure_data", "cokernel", "compose_pants",
    "connected_sum_braid", "dbc_obg_bound", "dbc_open_book", "determinant",
    "determinant_of_closure_3braid", "direct_sum", "euler_characteristic",
    "euler_number", "group_order", "h1_connected_binding",
    "induced_heegaard_genus", "obg_eval", "obg_upper_bound",
    "parse_braid_word", "parse_pants", "plumb", "seifert_from_pants",
    "seifert_h1", "smith_normal_form", "torus_rep",
]
