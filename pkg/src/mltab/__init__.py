"""Exact combinatorics of marginally large tableaux.

The library models the infinity crystal by marginally large tableaux in
types A, B, C, D, and G2, computes the segment and content statistics, the
mutually inverse maps to Kostant partitions and Lusztig data, verifies the
product identity over the root lattice by truncated-series arithmetic, and
provides the q-Kostant, Kostka-Foulkes, and Hall-Littlewood polynomials.
"""

from .cartan import (
    DomainError,
    LieType,
    PositiveRoot,
    all_long_words,
    beta_sequence,
    canonical_long_word,
    cartan_matrix,
    height,
    positive_roots,
    random_long_word,
    stabilizer_poly,
    validate_long_word,
    weyl_group,
    weyl_order,
)
from .gkseries import (
    GKReport,
    TruncatedSeries,
    kostant_count,
    kostant_partitions_of,
    kostant_partitions_up_to,
    lhs_product,
    one_minus_u_basis,
    rhs_lusztig_sum,
    rhs_tableau_sum,
    verify_gk,
)
from .lusztig import LusztigDatum, kostant_to_lusztig, lusztig_to_kostant, nz, theta
from .polynomial import IntPoly
# the segment-listing function itself stays on the submodule: a top-level
# re-export would shadow the mltab.segments module attribute
from .segments import (
    Segment,
    content,
    distinct_parts,
    seg,
    seg_prime,
    total_mult,
    upsilon,
    xi,
)
from .symfunc import (
    WeightPoly,
    dominance_leq,
    dominant_weights_below,
    freudenthal_multiplicity,
    hall_littlewood,
    kostka_foulkes,
    q_kostant,
    weyl_character,
    weyl_dim,
)
from .tableaux import (
    MLTableau,
    TableauError,
    crystal_dot,
    crystal_e,
    crystal_f,
    crystal_graph,
    enumerate_crystal,
    eps,
    far_eastern_reading,
    from_reduced,
    from_text,
    phi,
    reduced_text,
    t_infinity,
    to_text,
    validate,
    weight,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "GKReport",
    "IntPoly",
    "LieType",
    "LusztigDatum",
    "MLTableau",
    "PositiveRoot",
    "Segment",
    "TableauError",
    "TruncatedSeries",
    "WeightPoly",
    "all_long_words",
    "beta_sequence",
    "canonical_long_word",
    "cartan_matrix",
    "content",
    "crystal_dot",
    "crystal_e",
    "crystal_f",
    "crystal_graph",
    "distinct_parts",
    "dominance_leq",
    "dominant_weights_below",
    "enumerate_crystal",
    "eps",
    "far_eastern_reading",
    "freudenthal_multiplicity",
    "from_reduced",
    "from_text",
    "hall_littlewood",
    "height",
    "kostant_count",
    "kostant_partitions_of",
    "kostant_partitions_up_to",
    "kostant_to_lusztig",
    "kostka_foulkes",
    "lhs_product",
    "lusztig_to_kostant",
    "nz",
    "one_minus_u_basis",
    "phi",
    "positive_roots",
    "q_kostant",
    "random_long_word",
    "reduced_text",
    "rhs_lusztig_sum",
    "rhs_tableau_sum",
    "seg",
    "seg_prime",
    "stabilizer_poly",
    "t_infinity",
    "theta",
    "to_text",
    "total_mult",
    "upsilon",
    "validate",
    "validate_long_word",
    "verify_gk",
    "weight",
    "weyl_character",
    "weyl_dim",
    "weyl_group",
    "weyl_order",
    "xi",
]
