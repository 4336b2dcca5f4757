"""Exact Hilbert functions, closures, and standard monomials on uniform grids.

The package computes, in exact integer arithmetic, the affine Hilbert
function of weight-determined sets in uniform grids, finite-degree
closures of such sets, and order shattering / standard monomials of
arbitrary point sets.  Every closed form ships next to an independent
brute-force route, and the verification suites sweep a family of small
grids comparing the two.
"""

from .closure import (
    ClosureReport,
    closure_report,
    l_bar,
    l_step,
    t_set,
    z_closure_points,
    zstar_closure,
)
from .errors import (
    AritySmallerThanTwo,
    BadPermutation,
    DegreeOutOfRange,
    DuplicateEntries,
    EmptyArities,
    EmptyMultiset,
    GridError,
    LengthMismatch,
    ParseError,
    PointNotInGrid,
    SetTooSmall,
    UnknownSuite,
    WeightOutOfRange,
)
from .grid import (
    Point,
    UniformGrid,
    make_grid,
    parse_grid,
    parse_weight_set,
    weight,
)
from .hilbert import (
    BEEnumeration,
    be_enumeration,
    cube,
    hilbert_closed,
    hilbert_cube_closed,
    hilbert_layer,
    hilbert_profile,
    hilbert_rank_oracle,
    is_interval_compatible,
    profile_value,
    rank_block,
)
from .linalg import (
    ExactMatrix,
    RankResult,
    eval_matrix,
    eval_matrix_points,
    factorial_diag,
    falling_factorial_value,
    pivot_columns_in_order,
    rank,
    up_matrix,
)
from .shattering import (
    MonomialDownset,
    b_star,
    downset_size,
    is_downward_closed,
    ord_str,
    order_shatters,
    standard_monomials,
    tau,
)
from .verify import (
    SUITES,
    Limits,
    SuiteResult,
    verification_family,
    verify_suite,
)

__version__ = "0.1.0"
