"""Powers of m-primary monomial ideals, box decompositions and Ratliff-Rush closure."""

__version__ = "0.1.0"

from .errors import BadIdeal, DimensionMismatch, NoKFound, NotMPrimary
from .monomial import (
    MonomialIdeal,
    MPrimaryProfile,
    colon_ideal,
    colon_monomial,
    contains,
    divides,
    equals,
    ideal_power,
    ideal_product,
    ideal_sum,
    intersect,
    is_subset,
    lcm_gcd_mul,
    mprimary_profile,
    reduce_generators,
)
from .boxes import Cone, box_ideal, boxes_containing, cone_family, decompose_cone, is_corner, largest_box
from .goodness import ClassificationReport, Verdict, check_necessary, check_sufficient, classify, power_index_K, verify_box_decomposition
from .closure import axis_stabilize, is_ratliff_rush, is_very_good, oracle_closure, rr_closure, successive_quotient
from .freiman import FreimanVerdict, freiman_check, is_equigenerated
from .parsing import IdealSpec, parse_ideal
