"""setfam: exact machinery for intersecting, cross-intersecting and s-union
set families, with closed-form bounds, extremal constructions, compression
operators, and independent exhaustive search oracles."""

from .bounds import (
    BoundValue,
    Params,
    binomial,
    bound_classic,
    bound_diversity,
    bound_hemibundled,
    bound_pairs,
    bound_union,
)
from .constructions import ConstructionId, construct, expected_size
from .family import (
    Family,
    IsoCertificate,
    Subset,
    are_cross_intersecting,
    are_isomorphic,
    complement_family,
    degree_profile,
    is_s_union,
    is_t_intersecting,
    read_family,
    restrict,
    write_family,
)
from .search import Problem, SearchReport, check_layer_inequality, enumerate_shifted, solve
from .shifting import (
    disjointness_family,
    dominance_closure_check,
    fully_shift,
    is_shifted,
    lex_family,
    max_cross_partner,
    shift_once,
)

__version__ = "0.1.0"
